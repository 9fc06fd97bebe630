#pragma once

/**
 * @file zeta.hpp
 * @brief Zeta functions of count sequences: exact truncated series, rational
 *        reconstruction with mandatory re-expansion, cycle products for
 *        commuting permutations, log-derivative closed forms and residue
 *        decompositions for finite-set models.
 */

#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "synczeta/models.hpp"
#include "synczeta/recurrence.hpp"

namespace synczeta {

inline constexpr std::size_t kDefaultOrder = 64;
inline constexpr std::size_t kDefaultMaxDegree = 12;
inline constexpr double kResidueTolerance = 1e-9;
inline constexpr long kResidueDenominatorBound = 1000000;

enum class ZetaVerdict { Rational, AlgebraicCandidate, NaturalBoundary, Unclassified };

inline const char* to_string(ZetaVerdict v) {
    switch (v) {
        case ZetaVerdict::Rational: return "Rational";
        case ZetaVerdict::AlgebraicCandidate: return "AlgebraicCandidate";
        case ZetaVerdict::NaturalBoundary: return "NaturalBoundary";
        case ZetaVerdict::Unclassified: return "Unclassified";
    }
    return "Unclassified";
}

struct RationalForm {
    RationalFunction f;
};

/// Orbit structure of a commuting-permutation pair: (length, multiplicity).
struct CycleProduct {
    std::vector<std::pair<std::size_t, std::size_t>> orbits;

    std::size_t orbit_count() const {
        std::size_t p = 0;
        for (const auto& [len, mult] : orbits) p += mult;
        return p;
    }
    std::size_t periodic_points() const {
        std::size_t q = 0;
        for (const auto& [len, mult] : orbits) q += len * mult;
        return q;
    }
};

/// Partial-fraction data of the log-derivative P(z)/(1 - z^L) at the L-th
/// roots of unity, with the polynomial part split off as P = Q(1-z^L) + R.
struct ResidueData {
    EventualPeriod ep;
    std::size_t period = 1;                      // L
    std::vector<std::complex<double>> residues;  // C_k, k = 0..L-1
    std::vector<double> a_coeffs;                // A_k = Re C_k
    std::vector<double> b_coeffs;                // B_k; 0 at real omega^k
    IntPoly q_part, r_part;
    ZetaVerdict verdict = ZetaVerdict::Unclassified;
    std::optional<RationalFunction> rational_equivalent;  // set when verdict == Rational
};

struct SeriesOnly {};

struct ZetaReport {
    PowerSeries series;
    std::variant<RationalForm, CycleProduct, ResidueData, SeriesOnly> form;
    ZetaVerdict verdict = ZetaVerdict::Unclassified;
};

// ---- series ----------------------------------------------------------------

/// exp(sum c_k z^k / k) through the given order (default: the sequence length).
inline PowerSeries zeta_series(const CountSequence& c, std::size_t order = 0) {
    if (order == 0) order = c.n_max();
    if (order > c.n_max()) throw Error("series order exceeds the computed counts");
    PowerSeries s(order);
    for (std::size_t n = 1; n <= order; ++n) {
        if (!c.tame_at(n)) throw NotTame(n);
        s.set(n, make_rat(c.at(n), BigInt(static_cast<long>(n))));
    }
    return series_exp(s);
}

/// Signed variant for Lefschetz numbers.
inline PowerSeries zeta_series_signed(const std::vector<BigInt>& values) {
    PowerSeries s(values.size());
    for (std::size_t n = 1; n <= values.size(); ++n)
        s.set(n, make_rat(values[n - 1], BigInt(static_cast<long>(n))));
    return series_exp(s);
}

// ---- rational reconstruction -------------------------------------------------

/**
 * Try every degree pair (by total degree, then numerator degree) up to
 * max_deg; a hit must match the whole series and is re-expanded before being
 * accepted. SeriesOnly otherwise.
 */
inline ZetaReport reconstruct_zeta(const CountSequence& c, std::size_t max_deg = kDefaultMaxDegree,
                                   std::size_t order = 0) {
    PowerSeries s = zeta_series(c, order);
    ZetaReport out{s, SeriesOnly{}, ZetaVerdict::Unclassified};
    for (std::size_t total = 0; total <= 2 * max_deg; ++total) {
        for (std::size_t dn = (total > max_deg ? total - max_deg : 0);
             dn <= total && dn <= max_deg; ++dn) {
            const std::size_t dd = total - dn;
            if (dn + dd + kVerificationMargin > s.order()) continue;
            const auto f = pade_reconstruct(s, dn, dd);
            if (f) {
                out.form = RationalForm{*f};
                out.verdict = ZetaVerdict::Rational;
                return out;
            }
        }
    }
    return out;
}

// ---- commuting permutations --------------------------------------------------

inline PowerSeries cycle_product_series(const CycleProduct& cp, std::size_t order) {
    PowerSeries acc(order);
    acc.set(0, BigRat(1));
    for (const auto& [len, mult] : cp.orbits) {
        // 1/(1 - z^len) = sum_j z^{len j}
        PowerSeries geo(order);
        for (std::size_t j = 0; j * len <= order; ++j) geo.set(j * len, BigRat(1));
        for (std::size_t i = 0; i < mult; ++i) acc = acc * geo;
    }
    return acc;
}

inline RationalFunction cycle_product_rational(const CycleProduct& cp) {
    IntPoly den = IntPoly::one();
    for (const auto& [len, mult] : cp.orbits) {
        const IntPoly factor = IntPoly::one() - IntPoly::monomial(len);
        for (std::size_t i = 0; i < mult; ++i) den = den * factor;
    }
    return RationalFunction(IntPoly::one(), den);
}

/**
 * Orbit decomposition of sigma2^{-1} sigma1 for a commuting pair of
 * permutations; the zeta function is the product over orbits of
 * (1 - z^{orbit length})^{-1}, cross-checked against the exp-series.
 */
inline ZetaReport permutation_cycle_zeta(const FiniteMaps& m, std::size_t order = kDefaultOrder) {
    m.validate();
    if (!m.is_bijection(m.sigma1) || !m.is_bijection(m.sigma2))
        throw NotBijective("cycle product needs two permutations");
    if (!m.commuting()) throw NotCommuting("cycle product needs a commuting pair");

    const std::size_t pts = m.points();
    std::vector<std::size_t> inv2(pts);
    for (std::size_t x = 0; x < pts; ++x) inv2[m.sigma2[x]] = x;

    std::vector<bool> seen(pts, false);
    std::map<std::size_t, std::size_t> orbit_counts;
    for (std::size_t x = 0; x < pts; ++x) {
        if (seen[x]) continue;
        std::size_t len = 0, cur = x;
        do {
            seen[cur] = true;
            cur = inv2[m.sigma1[cur]];
            ++len;
        } while (cur != x);
        ++orbit_counts[len];
    }
    CycleProduct cp;
    for (const auto& [len, mult] : orbit_counts) cp.orbits.emplace_back(len, mult);

    const PowerSeries from_orbits = cycle_product_series(cp, order);
    const PowerSeries from_counts = zeta_series(counts_finite_maps(m, order));
    if (from_orbits != from_counts) throw Error("cycle product disagrees with the exp-series");
    return {from_orbits, cp, ZetaVerdict::Rational};
}

struct FunctionalEquation {
    std::size_t orbit_count;      // p
    std::size_t periodic_points;  // q
    bool holds;                   // S(1/z) = (-1)^p z^q S(z) as an exact identity
};

/// Substitute 1/z into the cycle product and clear powers: with
/// D(z) = prod (1 - z^len)^mult and q periodic points, z^q D(1/z) must equal
/// (-1)^p D(z) exactly.
inline FunctionalEquation functional_equation_check(const CycleProduct& cp) {
    IntPoly d = IntPoly::one(),flipped = IntPoly::one();
    for (const auto& [len, mult] : cp.orbits)
        for (std::size_t i = 0; i < mult; ++i) {
            d = d * (IntPoly::one() - IntPoly::monomial(len));
            flipped = flipped * (IntPoly::monomial(len) - IntPoly::one());
        }
    const std::size_t p = cp.orbit_count();
    const IntPoly want = (p % 2 == 0) ? d : -d;
    return {p, cp.periodic_points(), flipped == want};
}

// ---- eventually periodic counts ----------------------------------------------

/// P(z) with sum_{n>=1} c_n z^{n-1} = P(z)/(1 - z^L); deg P <= n0 + L - 2.
inline IntPoly periodic_numerator(const CountSequence& c, const EventualPeriod& ep) {
    const std::size_t need = ep.preperiod + ep.period - 1;
    if (c.n_max() < need) throw HorizonTooSmall(need);
    std::vector<BigInt> coeffs(need, BigInt(0));
    for (std::size_t n = 1; n <= ep.period && n <= need; ++n) coeffs[n - 1] = c.at(n);
    for (std::size_t n = ep.period + 1; n <= need; ++n)
        coeffs[n - 1] = c.at(n) - c.at(n - ep.period);
    return IntPoly(std::move(coeffs));
}

/**
 * The log-derivative of the zeta function as an exact rational function
 * P(z)/(1 - z^L), verified against the counts by expansion.
 */
inline RationalFunction log_derivative_form(const CountSequence& c, const EventualPeriod& ep) {
    const IntPoly p = periodic_numerator(c, ep);
    const IntPoly den = IntPoly::one() - IntPoly::monomial(ep.period);
    const RationalFunction f(p, den);
    const PowerSeries got = f.expand(c.n_max() - 1);
    for (std::size_t n = 1; n <= c.n_max(); ++n)
        if (got[n - 1] != BigRat(c.at(n))) throw Error("log-derivative form failed verification");
    return f;
}

inline RationalFunction log_derivative_form(const CountSequence& c) {
    return log_derivative_form(c, detect_eventual_period(c));
}

// ---- residue decomposition -----------------------------------------------------

namespace detail {

inline bool near_integer(double x) { return std::abs(x - std::round(x)) <= kResidueTolerance; }

/// Continued-fraction rationalization with a denominator bound.
inline bool near_rational(double x, long max_den) {
    double a = x;
    long p0 = 1, q0 = 0, p1 = static_cast<long>(std::floor(a)), q1 = 1;
    a -= std::floor(a);
    for (int i = 0; i < 48 && q1 <= max_den; ++i) {
        if (std::abs(x - static_cast<double>(p1) / static_cast<double>(q1)) <= kResidueTolerance)
            return true;
        if (a < 1e-15) break;
        a = 1.0 / a;
        const double fl = std::floor(a);
        if (fl > 4e18) break;
        const long t = static_cast<long>(fl);
        const long p2 = t * p1 + p0, q2 = t * q1 + q0;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        a -= fl;
    }
    return false;
}

}  // namespace detail

/**
 * Residues of -R(z)/(z^L - 1) at the L-th roots of unity, where the counts'
 * generating function is P/(1-z^L) and P = Q (1-z^L) + R with deg R < L:
 * C_k = -R(omega^k) / (L omega^{k(L-1)}). The A_k = Re C_k exponents decide
 * the classification; residues are computed in double precision and the
 * Rational case is certified by exact reconstruction.
 */
inline ResidueData residue_decomposition(const CountSequence& c) {
    if (const std::size_t bad = c.first_non_tame()) throw NotTame(bad);
    const EventualPeriod ep = detect_eventual_period(c);
    ResidueData out;
    out.ep = ep;
    out.period = ep.period;
    const IntPoly p = periodic_numerator(c, ep);
    const IntPoly den = IntPoly::one() - IntPoly::monomial(ep.period);
    auto [q, r] = divmod(to_rat(p), to_rat(den));
    out.q_part = to_int(q);
    out.r_part = to_int(r);

    const std::size_t big_l = ep.period;
    const double angle = 2.0 * std::numbers::pi / static_cast<double>(big_l);
    bool all_real = true;
    for (std::size_t k = 0; k < big_l; ++k) {
        const std::complex<double> omega_k = std::polar(1.0, angle * static_cast<double>(k));
        const std::complex<double> omega_pow =
            std::polar(1.0, angle * static_cast<double>(k * (big_l - 1)));
        const std::complex<double> ck =
            -out.r_part.evaluate_complex(omega_k) / (static_cast<double>(big_l) * omega_pow);
        out.residues.push_back(ck);
        out.a_coeffs.push_back(ck.real());
        if (std::abs(ck.imag()) > kResidueTolerance) all_real = false;

        const double re_omega = omega_k.real();
        if (std::abs(std::abs(re_omega) - 1.0) > kResidueTolerance) {
            const double root = std::sqrt(1.0 - re_omega * re_omega);
            out.b_coeffs.push_back((ck.real() * re_omega - (ck * std::conj(omega_k)).real()) / root);
        } else {
            out.b_coeffs.push_back(0.0);
        }
    }

    if (all_real) {
        bool all_int = out.q_part.is_zero(), all_rat = out.q_part.is_zero();
        for (const double a : out.a_coeffs) {
            all_int = all_int && detail::near_integer(a);
            all_rat = all_rat && detail::near_rational(a, kResidueDenominatorBound);
        }
        if (all_int) {
            out.verdict = ZetaVerdict::Rational;
            // Degrees of the equivalent rational form are bounded by sum |A_k|.
            std::size_t deg_bound = 0;
            for (const double a : out.a_coeffs)
                deg_bound += static_cast<std::size_t>(std::llround(std::abs(a)));
            deg_bound = std::max<std::size_t>(deg_bound, 1);
            const std::size_t need = 2 * deg_bound + kVerificationMargin;
            CountSequence base = c;
            if (c.n_max() < need && c.model()) base = counts(*c.model(), need);
            if (base.n_max() >= need) {
                const ZetaReport rec = reconstruct_zeta(base, deg_bound);
                if (rec.verdict == ZetaVerdict::Rational)
                    out.rational_equivalent = std::get<RationalForm>(rec.form).f;
            }
        } else if (all_rat) {
            out.verdict = ZetaVerdict::AlgebraicCandidate;
        }
    }
    return out;
}

// ---- classification -------------------------------------------------------------

/**
 * Rational if reconstruction succeeds; NaturalBoundary by the S-integer
 * decision rule; AlgebraicCandidate from finite-model residue exponents;
 * Unclassified otherwise.
 */
inline ZetaVerdict classify(const CountSequence& c, std::size_t max_deg = kDefaultMaxDegree) {
    if (const std::size_t bad = c.first_non_tame()) throw NotTame(bad);
    if (reconstruct_zeta(c, max_deg).verdict == ZetaVerdict::Rational)
        return ZetaVerdict::Rational;
    if (c.model() && std::holds_alternative<SIntegerPair>(*c.model())) {
        const auto& m = std::get<SIntegerPair>(*c.model());
        if (boundary_decide(m.a, m.b, m.primes).verdict == Dichotomy::NaturalBoundary)
            return ZetaVerdict::NaturalBoundary;
        return ZetaVerdict::Unclassified;
    }
    if (c.model() && std::holds_alternative<FiniteMaps>(*c.model())) {
        const ZetaVerdict v = residue_decomposition(c).verdict;
        return v == ZetaVerdict::Rational ? ZetaVerdict::Unclassified : v;
    }
    return ZetaVerdict::Unclassified;
}

}  // namespace synczeta
