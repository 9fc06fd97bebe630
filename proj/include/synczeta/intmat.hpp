#pragma once

/**
 * @file intmat.hpp
 * @brief Dense integer matrices with exact arithmetic: powers, determinants,
 *        characteristic polynomials, Smith normal form.
 */

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "synczeta/polynomial.hpp"

namespace synczeta {

class IntMat {
  public:
    IntMat() = default;
    IntMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, BigInt(0)) {}
    explicit IntMat(std::vector<std::vector<BigInt>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows[0].size() : 0;
        for (const auto& r : rows) {
            if (r.size() != cols_) throw ShapeMismatch("ragged matrix rows");
            a_.insert(a_.end(), r.begin(), r.end());
        }
    }
    static IntMat from_longs(const std::vector<std::vector<long>>& rows) {
        std::vector<std::vector<BigInt>> big;
        big.reserve(rows.size());
        for (const auto& r : rows) big.emplace_back(r.begin(), r.end());
        return IntMat(std::move(big));
    }

    static IntMat identity(std::size_t n) {
        IntMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    BigInt& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const BigInt& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    friend bool operator==(const IntMat& x, const IntMat& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }
    friend bool operator!=(const IntMat& x, const IntMat& y) { return !(x == y); }

    friend IntMat operator+(const IntMat& x, const IntMat& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw ShapeMismatch("matrix sum shape");
        IntMat out = x;
        for (std::size_t i = 0; i < out.a_.size(); ++i) out.a_[i] += y.a_[i];
        return out;
    }
    friend IntMat operator-(const IntMat& x, const IntMat& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw ShapeMismatch("matrix difference shape");
        IntMat out = x;
        for (std::size_t i = 0; i < out.a_.size(); ++i) out.a_[i] -= y.a_[i];
        return out;
    }

    friend IntMat operator*(const IntMat& x, const IntMat& y) {
        if (x.cols_ != y.rows_) throw ShapeMismatch("matrix product shape");
        IntMat out(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                const BigInt& v = x.at(i, k);
                if (v == 0) continue;
                for (std::size_t j = 0; j < y.cols_; ++j) out.at(i, j) += v * y.at(k, j);
            }
        return out;
    }

    /// Exact power by repeated multiplication.
    IntMat pow(std::size_t e) const {
        if (!is_square()) throw ShapeMismatch("power of non-square matrix");
        IntMat acc = identity(rows_), base = *this;
        while (e) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    BigInt trace() const {
        if (!is_square()) throw ShapeMismatch("trace of non-square matrix");
        BigInt t(0);
        for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
        return t;
    }

    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            s += i ? "; " : "";
            for (std::size_t j = 0; j < cols_; ++j) s += (j ? ", " : "") + at(i, j).str();
        }
        return s + "]";
    }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BigInt> a_;
};

/// Fraction-free (Bareiss) determinant.
inline BigInt det(const IntMat& m) {
    if (!m.is_square()) throw ShapeMismatch("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return BigInt(1);
    std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);
    BigInt prev(1);
    int sgn = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && a[piv][k] == 0) ++piv;
            if (piv == n) return BigInt(0);
            std::swap(a[piv], a[k]);
            sgn = -sgn;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sgn > 0 ? a[n - 1][n - 1] : BigInt(-a[n - 1][n - 1]);
}

/// Characteristic polynomial det(zI - M), monic, by the Faddeev-LeVerrier
/// recurrence over the rationals (all outputs are integers).
inline IntPoly char_poly(const IntMat& m) {
    if (!m.is_square()) throw ShapeMismatch("characteristic polynomial of non-square matrix");
    const std::size_t d = m.rows();
    std::vector<BigRat> c(d + 1, BigRat(0));
    c[d] = 1;  // leading coefficient of z^d
    std::vector<std::vector<BigRat>> mk(d, std::vector<BigRat>(d, BigRat(0)));
    for (std::size_t i = 0; i < d; ++i) mk[i][i] = 1;
    for (std::size_t k = 1; k <= d; ++k) {
        // AM = m * mk
        std::vector<std::vector<BigRat>> am(d, std::vector<BigRat>(d, BigRat(0)));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t l = 0; l < d; ++l) {
                if (m.at(i, l) == 0) continue;
                const BigRat v(m.at(i, l));
                for (std::size_t j = 0; j < d; ++j) am[i][j] += v * mk[l][j];
            }
        BigRat tr(0);
        for (std::size_t i = 0; i < d; ++i) tr += am[i][i];
        const BigRat ck = -tr / BigRat(static_cast<long>(k));
        c[d - k] = ck;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) mk[i][j] = am[i][j] + (i == j ? ck : BigRat(0));
    }
    return to_int(RatPoly(std::move(c)));
}

/// det(I - Mz) as a polynomial in z (the reversed characteristic polynomial).
inline IntPoly det_identity_minus_z(const IntMat& m) {
    const IntPoly chi = char_poly(m);
    std::vector<BigInt> cs(chi.coeffs().rbegin(), chi.coeffs().rend());
    return IntPoly(std::move(cs));
}

inline bool commutes(const IntMat& a, const IntMat& b) { return a * b == b * a; }

/// Exact inverse of a matrix with determinant +-1; throws if not unimodular.
inline IntMat inverse_unimodular(const IntMat& m) {
    if (!m.is_square()) throw ShapeMismatch("inverse of non-square matrix");
    const BigInt d = det(m);
    if (d != 1 && d != -1) throw Error("matrix is not unimodular");
    const std::size_t n = m.rows();
    // Gauss-Jordan over the rationals; the result is integral by unimodularity.
    std::vector<std::vector<BigRat>> a(n, std::vector<BigRat>(2 * n, BigRat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = BigRat(m.at(i, j));
        a[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (a[piv][col] == 0) ++piv;
        std::swap(a[piv], a[col]);
        const BigRat inv = BigRat(1) / a[col][col];
        for (auto& v : a[col]) v *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            const BigRat f = a[i][col];
            for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    IntMat out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.at(i, j) = to_integer(a[i][n + j]);
    return out;
}

/**
 * Smith normal form elementary divisors d_1 | d_2 | ... (nonnegative),
 * including zeros for a singular matrix.
 */
inline std::vector<BigInt> smith_normal_form(const IntMat& m) {
    std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = m.at(i, j);

    const std::size_t rank_bound = std::min(rows, cols);
    std::vector<BigInt> divisors;
    for (std::size_t t = 0; t < rank_bound; ++t) {
        // Locate a nonzero entry of minimal absolute value in the submatrix.
        std::size_t pi = t, pj = t;
        bool found = false;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                if (a[i][j] == 0) continue;
                if (!found || abs_int(a[i][j]) < abs_int(a[pi][pj])) {
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found) break;

        for (;;) {
            std::swap(a[pi], a[t]);
            for (std::size_t i = t; i < rows; ++i) std::swap(a[i][pj], a[i][t]);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                const BigInt q = a[i][t] / a[t][t];
                for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                const BigInt q = a[t][j] / a[t][t];
                for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) clean = false;
            }
            if (clean) {
                // Pivot must divide the rest of the submatrix.
                bool divides_all = true;
                for (std::size_t i = t + 1; i < rows && divides_all; ++i)
                    for (std::size_t j = t + 1; j < cols && divides_all; ++j)
                        if (a[i][j] % a[t][t] != 0) {
                            for (std::size_t jj = t; jj < cols; ++jj) a[t][jj] += a[i][jj];
                            divides_all = false;
                        }
                if (divides_all) break;
            }
            // Re-select the minimal pivot and repeat.
            pi = t;
            pj = t;
            found = false;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j) {
                    if (a[i][j] == 0) continue;
                    if (!found || abs_int(a[i][j]) < abs_int(a[pi][pj])) {
                        pi = i;
                        pj = j;
                        found = true;
                    }
                }
        }
        divisors.push_back(abs_int(a[t][t]));
    }
    divisors.resize(rank_bound, BigInt(0));
    return divisors;
}

}  // namespace synczeta
