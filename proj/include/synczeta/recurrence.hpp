#pragma once

/**
 * @file recurrence.hpp
 * @brief Exact linear-recurrence detection (Berlekamp-Massey over the
 *        rationals) and full-order Pade reconstruction of rational functions.
 *
 * Acceptance of a fit always requires a verification margin of extra matched
 * terms beyond the information-theoretic minimum, so accidental short fits
 * on truncated data are rejected.
 */

#include <cstddef>
#include <optional>
#include <vector>

#include "synczeta/rational_function.hpp"

namespace synczeta {

inline constexpr std::size_t kVerificationMargin = 8;

namespace detail {

/// Row-echelon solve of A x = rhs over the rationals. Inconsistent systems
/// yield nullopt; underdetermined ones get free variables set to zero.
inline std::optional<std::vector<BigRat>> solve_linear(std::vector<std::vector<BigRat>> a,
                                                       std::vector<BigRat> rhs,
                                                       std::size_t ncols) {
    const std::size_t nrows = a.size();
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < nrows; ++col) {
        std::size_t sel = row;
        while (sel < nrows && a[sel][col] == 0) ++sel;
        if (sel == nrows) continue;
        std::swap(a[sel], a[row]);
        std::swap(rhs[sel], rhs[row]);
        const BigRat inv = BigRat(1) / a[row][col];
        for (std::size_t j = col; j < ncols; ++j) a[row][j] *= inv;
        rhs[row] *= inv;
        for (std::size_t i = 0; i < nrows; ++i) {
            if (i == row || a[i][col] == 0) continue;
            const BigRat f = a[i][col];
            for (std::size_t j = col; j < ncols; ++j) a[i][j] -= f * a[row][j];
            rhs[i] -= f * rhs[row];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < nrows; ++i)
        if (rhs[i] != 0) return std::nullopt;
    std::vector<BigRat> x(ncols, BigRat(0));
    for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = rhs[i];
    return x;
}

}  // namespace detail

/**
 * Minimal characteristic polynomial of the shortest linear recurrence that
 * reproduces every supplied value. Returns the primitive integer polynomial
 * with positive leading coefficient, or nullopt if no recurrence of order
 * <= max_order fits all values.
 */
inline std::optional<IntPoly> find_recurrence(const std::vector<BigRat>& values,
                                              std::size_t max_order) {
    const std::size_t required = 2 * max_order + kVerificationMargin;
    if (values.size() < required) throw NeedMoreTerms(required);

    // Berlekamp-Massey over Q: C is the connection polynomial, C(0) = 1.
    std::vector<BigRat> conn{BigRat(1)}, prev{BigRat(1)};
    std::size_t order = 0, gap = 1;
    BigRat prev_disc(1);
    for (std::size_t n = 0; n < values.size(); ++n) {
        BigRat disc = values[n];
        for (std::size_t i = 1; i < conn.size(); ++i) disc += conn[i] * values[n - i];
        if (disc == 0) {
            ++gap;
        } else if (2 * order <= n) {
            const std::vector<BigRat> tmp = conn;
            const BigRat f = disc / prev_disc;
            conn.resize(std::max(conn.size(), prev.size() + gap), BigRat(0));
            for (std::size_t i = 0; i < prev.size(); ++i) conn[i + gap] -= f * prev[i];
            order = n + 1 - order;
            prev = tmp;
            prev_disc = disc;
            gap = 1;
        } else {
            const BigRat f = disc / prev_disc;
            conn.resize(std::max(conn.size(), prev.size() + gap), BigRat(0));
            for (std::size_t i = 0; i < prev.size(); ++i) conn[i + gap] -= f * prev[i];
            ++gap;
        }
    }
    if (order > max_order) return std::nullopt;

    // Characteristic polynomial z^order * C(1/z).
    std::vector<BigRat> chi(order + 1, BigRat(0));
    for (std::size_t i = 0; i < conn.size() && i <= order; ++i) chi[order - i] = conn[i];
    return primitive_from_rat(RatPoly(std::move(chi)));
}

/**
 * Rational function p/q with deg p <= deg_num, deg q <= deg_den, q(0) = 1,
 * whose expansion matches every coefficient of s through s.order(). Returns
 * nullopt when no such function exists at the given degrees.
 */
inline std::optional<RationalFunction> pade_reconstruct(const PowerSeries& s,
                                                        std::size_t deg_num,
                                                        std::size_t deg_den) {
    const std::size_t n = s.order();
    if (n < deg_num + deg_den + kVerificationMargin)
        throw NeedMoreTerms(deg_num + deg_den + kVerificationMargin);

    // All cancellation constraints at once: for k in (deg_num, n],
    // sum_{j=0}^{deg_den} q_j s_{k-j} = 0 with q_0 = 1.
    std::vector<std::vector<BigRat>> rows;
    std::vector<BigRat> rhs;
    for (std::size_t k = deg_num + 1; k <= n; ++k) {
        std::vector<BigRat> row(deg_den, BigRat(0));
        for (std::size_t j = 1; j <= deg_den && j <= k; ++j) row[j - 1] = s[k - j];
        rows.push_back(std::move(row));
        rhs.push_back(-s[k]);
    }
    auto sol = detail::solve_linear(std::move(rows), std::move(rhs), deg_den);
    if (!sol) return std::nullopt;

    std::vector<BigRat> qc(deg_den + 1, BigRat(0));
    qc[0] = 1;
    for (std::size_t j = 0; j < deg_den; ++j) qc[j + 1] = (*sol)[j];
    const RatPoly q(std::move(qc));

    const PowerSeries prod = s * series_from_poly(q, n);
    std::vector<BigRat> pc(deg_num + 1, BigRat(0));
    for (std::size_t k = 0; k <= deg_num && k <= n; ++k) pc[k] = prod[k];
    const RatPoly p(std::move(pc));

    std::optional<RationalFunction> out;
    try {
        out.emplace(p, q);
    } catch (const NotFatouNormal&) {
        return std::nullopt;
    }
    // Independent re-expansion check of the normalized form.
    if (out->expand(n) != s) return std::nullopt;
    return out;
}

}  // namespace synczeta
