#pragma once

/**
 * @file power_series.hpp
 * @brief Truncated power series over the rationals, exact through a carried order.
 */

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "synczeta/polynomial.hpp"

namespace synczeta {

class PowerSeries {
  public:
    PowerSeries() : coeffs_(1, BigRat(0)) {}
    explicit PowerSeries(std::size_t order) : coeffs_(order + 1, BigRat(0)) {}
    /// Coefficients ascending; padded with zeros (or cut) to length order+1.
    PowerSeries(std::size_t order, std::vector<BigRat> coeffs) : coeffs_(std::move(coeffs)) {
        coeffs_.resize(order + 1, BigRat(0));
    }

    std::size_t order() const { return coeffs_.size() - 1; }

    const BigRat& operator[](std::size_t k) const {
        static const BigRat kZero(0);
        return k < coeffs_.size() ? coeffs_[k] : kZero;
    }
    void set(std::size_t k, const BigRat& v) {
        if (k >= coeffs_.size()) throw Error("coefficient index beyond series order");
        coeffs_[k] = v;
    }

    const std::vector<BigRat>& coeffs() const { return coeffs_; }

    PowerSeries truncated(std::size_t new_order) const {
        std::vector<BigRat> cs(coeffs_.begin(),
                               coeffs_.begin() + std::min(coeffs_.size(), new_order + 1));
        return PowerSeries(new_order, std::move(cs));
    }

    friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const PowerSeries& a, const PowerSeries& b) { return !(a == b); }

    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
        const std::size_t n = std::min(a.order(), b.order());
        PowerSeries out(n);
        for (std::size_t k = 0; k <= n; ++k) out.coeffs_[k] = a[k] + b[k];
        return out;
    }

    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
        const std::size_t n = std::min(a.order(), b.order());
        PowerSeries out(n);
        for (std::size_t k = 0; k <= n; ++k) out.coeffs_[k] = a[k] - b[k];
        return out;
    }

    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
        const std::size_t n = std::min(a.order(), b.order());
        PowerSeries out(n);
        for (std::size_t i = 0; i <= n; ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; i + j <= n; ++j) {
                if (b[j] == 0) continue;
                out.coeffs_[i + j] += a[i] * b[j];
            }
        }
        return out;
    }

    friend PowerSeries operator*(const PowerSeries& a, const BigRat& s) {
        PowerSeries out(a.order());
        for (std::size_t k = 0; k <= a.order(); ++k) out.coeffs_[k] = a[k] * s;
        return out;
    }

    std::string str() const {
        std::string s;
        for (std::size_t k = 0; k <= order(); ++k) {
            if (!s.empty()) s += ", ";
            s += coeffs_[k].str();
        }
        return "[" + s + "]";
    }

  private:
    std::vector<BigRat> coeffs_;
};

inline PowerSeries series_from_poly(const RatPoly& p, std::size_t order) {
    PowerSeries out(order);
    for (std::size_t k = 0; k <= order && static_cast<long>(k) <= p.degree(); ++k)
        out.set(k, p[k]);
    return out;
}

/// Multiplicative inverse of a series with s(0) != 0.
inline PowerSeries series_inverse(const PowerSeries& s) {
    if (s[0] == 0) throw Error("series has no inverse: constant term is zero");
    const std::size_t n = s.order();
    PowerSeries out(n);
    const BigRat c0_inv = BigRat(1) / s[0];
    out.set(0, c0_inv);
    for (std::size_t k = 1; k <= n; ++k) {
        BigRat acc(0);
        for (std::size_t j = 1; j <= k; ++j) acc += s[j] * out[k - j];
        out.set(k, -acc * c0_inv);
    }
    return out;
}

/// Exact exp of a series with zero constant term, via (exp s)' = s' (exp s):
/// n*e_n = sum_{k=1..n} k*s_k*e_{n-k}.
inline PowerSeries series_exp(const PowerSeries& s) {
    if (s[0] != 0) throw ConstantTermNonzero("series_exp needs s(0) = 0");
    const std::size_t n = s.order();
    PowerSeries out(n);
    out.set(0, BigRat(1));
    for (std::size_t k = 1; k <= n; ++k) {
        BigRat acc(0);
        for (std::size_t j = 1; j <= k; ++j) acc += BigRat(static_cast<long>(j)) * s[j] * out[k - j];
        out.set(k, acc / BigRat(static_cast<long>(k)));
    }
    return out;
}

/// Inverse recurrence to series_exp, for u with u(0) = 1.
inline PowerSeries series_log(const PowerSeries& u) {
    if (u[0] != 1) throw Error("series_log needs u(0) = 1");
    const std::size_t n = u.order();
    PowerSeries out(n);
    for (std::size_t k = 1; k <= n; ++k) {
        BigRat acc = BigRat(static_cast<long>(k)) * u[k];
        for (std::size_t j = 1; j < k; ++j) acc -= BigRat(static_cast<long>(j)) * out[j] * u[k - j];
        out.set(k, acc / BigRat(static_cast<long>(k)));
    }
    return out;
}

/// Expansion of p/q through the given order; requires q(0) != 0.
inline PowerSeries expand_fraction(const RatPoly& p, const RatPoly& q, std::size_t order) {
    return series_from_poly(p, order) * series_inverse(series_from_poly(q, order));
}

/// Termwise derivative, exact through order - 1.
inline PowerSeries series_derivative(const PowerSeries& s) {
    if (s.order() == 0) return PowerSeries(0);
    PowerSeries out(s.order() - 1);
    for (std::size_t k = 1; k <= s.order(); ++k)
        out.set(k - 1, s[k] * BigRat(static_cast<long>(k)));
    return out;
}

}  // namespace synczeta
