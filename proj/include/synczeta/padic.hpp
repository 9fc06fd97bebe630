#pragma once

/**
 * @file padic.hpp
 * @brief p-adic ordinals and norms of rationals, the truncated p-adic
 *        logarithm norm, and the rational/natural-boundary decision rule
 *        for S-integer count sequences.
 *
 * Norms are exact: |q|_p = p^{-ord_p q} is returned as a rational. The
 * logarithm norm never sums the series; for a unit xi it raises xi to a
 * power e with |xi^e - 1|_p < p^{-1/(p-1)}, where the first series term
 * strictly dominates all others in the ultrametric, so
 * |log_p(xi^e)|_p = |xi^e - 1|_p exactly.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "synczeta/arith.hpp"
#include "synczeta/numbers.hpp"

namespace synczeta {

inline long ord_p(const BigInt& x, std::uint64_t p) {
    if (x == 0) throw ZeroHasInfiniteOrd("ord_p(0) is infinite");
    if (p < 2) throw Error("ord_p needs a prime p");
    long ord = 0;
    BigInt v = x;
    const BigInt bp(p);
    while (v % bp == 0) {
        v /= bp;
        ++ord;
    }
    return ord;
}

inline long ord_p(const BigRat& q, std::uint64_t p) {
    if (q == 0) throw ZeroHasInfiniteOrd("ord_p(0) is infinite");
    long ord = 0;
    if (numerator(q) % BigInt(p) == 0) ord = ord_p(numerator(q), p);
    else if (denominator(q) % BigInt(p) == 0) ord = -ord_p(denominator(q), p);
    return ord;
}

/// Valuation record; ord is empty exactly for q = 0 (infinite ordinal).
struct PadicValuation {
    std::uint64_t p = 2;
    std::optional<long> ord;

    /// -ord, so that |q|_p = p^{norm_log}; meaningful only for q != 0.
    long norm_log() const {
        if (!ord) throw ZeroHasInfiniteOrd("norm_log of 0");
        return -*ord;
    }
};

inline PadicValuation valuation(const BigRat& q, std::uint64_t p) {
    if (q == 0) return {p, std::nullopt};
    return {p, ord_p(q, p)};
}

inline BigRat padic_norm(const BigRat& q, std::uint64_t p) {
    if (q == 0) return BigRat(0);
    const long ord = ord_p(q, p);
    return pow_rat(BigRat(static_cast<long>(p)), -ord);
}

/// ord_p(a^n - b^n) via modular powers; grows the modulus cap as needed.
inline long ord_p_pow_diff(const BigInt& a, const BigInt& b, std::size_t n, std::uint64_t p) {
    for (long cap = 24;; cap *= 2) {
        const BigInt mod = pow_int(BigInt(p), static_cast<std::size_t>(cap));
        const BigInt ra = ((a % mod) + mod) % mod;
        const BigInt rb = ((b % mod) + mod) % mod;
        const BigInt pa = boost::multiprecision::powm(ra, BigInt(n), mod);
        const BigInt pb = boost::multiprecision::powm(rb, BigInt(n), mod);
        const BigInt d = ((pa - pb) % mod + mod) % mod;
        if (d != 0) return ord_p(d, p);
        // a^n == b^n mod p^cap; either the true ord exceeds cap or it is infinite.
        if (pow_int(a, n) == pow_int(b, n)) throw ZeroHasInfiniteOrd("a^n equals b^n");
    }
}

/**
 * Exact |log_p xi|_p for a rational unit xi (|xi|_p = 1) that is not a root
 * of unity; the rational roots of unity are exactly +-1.
 */
inline BigRat padic_log_norm(const BigRat& xi, std::uint64_t p) {
    if (xi == 1 || xi == -1) throw RootOfUnity("log_p of a root of unity");
    if (xi == 0 || ord_p(xi, p) != 0) throw Error("padic_log_norm needs |xi|_p = 1");
    const long threshold = (p == 2) ? 2 : 1;  // ord > 1/(p-1)
    const BigInt x = numerator(xi), y = denominator(xi);
    for (std::uint64_t e = 1; e <= p + 1; ++e) {
        const BigInt diff = pow_int(x, e) - pow_int(y, e);
        if (diff == 0) throw RootOfUnity("log_p of a root of unity");
        const long v = ord_p(diff, p);
        if (v >= threshold) {
            // log(xi^e) = e log(xi); the first term of log(1 + (xi^e - 1)) dominates.
            const long ord_log = v - ord_p(BigInt(e), p);
            return pow_rat(BigRat(static_cast<long>(p)), -ord_log);
        }
    }
    throw Error("no exponent brought xi into the convergence disc");  // unreachable for units
}

/**
 * Constant C with 1/n <= C * |xi^n - 1|_p for all n >= 1:
 * C = max{1, M* / |log_p xi|_p} with M* = max_{1<=m<=k/ln p} m p^{-(m-1)/k};
 * over the rationals the extension degree k is 1, so M* = 1.
 */
inline BigRat lemma24_constant(const BigRat& xi, std::uint64_t p) {
    const BigRat log_norm = padic_log_norm(xi, p);
    const BigRat m_star(1);
    const BigRat c = m_star / log_norm;
    return c < 1 ? BigRat(1) : c;
}

enum class Dichotomy { Rational, NaturalBoundary };

struct BoundaryWitness {
    std::uint64_t p;
    std::string reason;
};

struct BoundaryVerdict {
    Dichotomy verdict = Dichotomy::Rational;
    std::vector<BoundaryWitness> witnesses;  // nonempty iff NaturalBoundary
};

/**
 * Dichotomy decision for the rank-1 S-integer pair (a, b): the count series
 * has a natural boundary iff some p in S sees |a|_p = |b|_p, i.e. the unit
 * ratio part contributes a genuinely p-adic factor |(a/b)^n - 1|_p.
 */
inline BoundaryVerdict boundary_decide(const BigInt& a, const BigInt& b,
                                       const std::vector<std::uint64_t>& s_primes) {
    if (a == 0 || b == 0) throw Error("boundary_decide needs nonzero a, b");
    if (abs_int(a) == abs_int(b)) throw NotTame();
    BoundaryVerdict out;
    for (const auto p : s_primes) {
        if (ord_p(a, p) != ord_p(b, p)) continue;
        out.verdict = Dichotomy::NaturalBoundary;
        out.witnesses.push_back(
            {p, "ord_" + std::to_string(p) + "(a) = ord_" + std::to_string(p) + "(b) = " +
                    std::to_string(ord_p(a, p)) + " and a/b is not a root of unity"});
    }
    return out;
}

}  // namespace synczeta
