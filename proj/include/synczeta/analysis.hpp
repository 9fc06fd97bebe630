#pragma once

/**
 * @file analysis.hpp
 * @brief Growth rates, Gauss/Euler congruence verification, asymptotic
 *        trichotomy of rational-zeta count sequences, the entropy
 *        cross-check for commuting toral pairs, and Lefschetz zeta /
 *        torsion special values for homology data.
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "synczeta/arith.hpp"
#include "synczeta/spectral.hpp"
#include "synczeta/zeta.hpp"

namespace synczeta {

// ---- growth ------------------------------------------------------------------

struct GrowthReport {
    double upper = 0.0;  // max of c_n^{1/n} over the window
    double lower = 0.0;  // min over the window
    bool degenerate = false;  // no positive count in the window
    std::size_t zero_indices = 0;  // zeros met in the window, excluded from roots
    std::size_t window_begin = 0, window_end = 0;
    std::optional<BigRat> exact;  // per-index product of maxima, when the model admits one
    std::string exact_description;
};

/// Root statistics c_n^{1/n} over the last half of the range.
inline GrowthReport growth_estimate(const CountSequence& c) {
    if (const std::size_t bad = c.first_non_tame()) throw NotTame(bad);
    GrowthReport out;
    out.window_begin = c.n_max() / 2 + 1;
    out.window_end = c.n_max();
    bool seen = false;
    for (std::size_t n = out.window_begin; n <= out.window_end; ++n) {
        if (c.at(n) == 0) {
            ++out.zero_indices;
            continue;
        }
        const double root = nth_root(c.at(n), n);
        if (!seen) {
            out.upper = out.lower = root;
            seen = true;
        } else {
            out.upper = std::max(out.upper, root);
            out.lower = std::min(out.lower, root);
        }
    }
    out.degenerate = !seen;
    return out;
}

/// Exact growth for triangular toral pairs: per-index max of |diagonal| entries.
inline BigRat growth_exact_toral(const ToralPair& m) {
    m.validate();
    const std::size_t d = m.a.rows();
    auto triangular = [d](const IntMat& x, bool upper) {
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                if ((upper ? i > j : i < j) && x.at(i, j) != 0) return false;
        return true;
    };
    const bool ok = (triangular(m.a, true) && triangular(m.b, true)) ||
                    (triangular(m.a, false) && triangular(m.b, false));
    if (!ok) throw HypothesisViolated("exact growth needs triangular matrices");
    BigRat prod(1);
    for (std::size_t i = 0; i < d; ++i) {
        const BigInt xi = abs_int(m.a.at(i, i)), eta = abs_int(m.b.at(i, i));
        if (xi == eta) throw HypothesisViolated("equal eigenvalue moduli at index " + std::to_string(i));
        prod *= BigRat(xi > eta ? xi : eta);
    }
    return prod;
}

inline BigRat growth_exact_circle(const CirclePower& m) {
    const BigInt a = abs_int(BigInt(m.d_alpha)), b = abs_int(BigInt(m.d_beta));
    if (a == b) throw HypothesisViolated("equal moduli: the pair is not tame");
    return BigRat(a > b ? a : b);
}

/// Exact growth for the rank-1 S-integer pair: the archimedean max times,
/// for each p in S, max{|a|_p, |b|_p} when the ordinals differ and the
/// common |a|_p = |b|_p otherwise.
inline BigRat growth_exact_s_integer(const SIntegerPair& m) {
    m.validate();
    if (abs_int(m.a) == abs_int(m.b)) throw HypothesisViolated("equal moduli: the pair is not tame");
    BigRat prod(abs_int(m.a) > abs_int(m.b) ? abs_int(m.a) : abs_int(m.b));
    for (const auto p : m.primes) {
        const BigRat na = padic_norm(BigRat(m.a), p), nb = padic_norm(BigRat(m.b), p);
        prod *= (na == nb) ? nb : (na > nb ? na : nb);
    }
    return prod;
}

/// Exact growth when the model admits one (diagonal/triangular data).
inline std::optional<BigRat> growth_exact(const DynModel& model) {
    if (std::holds_alternative<CirclePower>(model))
        return growth_exact_circle(std::get<CirclePower>(model));
    if (std::holds_alternative<SIntegerPair>(model))
        return growth_exact_s_integer(std::get<SIntegerPair>(model));
    if (std::holds_alternative<ToralPair>(model)) {
        try {
            return growth_exact_toral(std::get<ToralPair>(model));
        } catch (const HypothesisViolated&) {
            return std::nullopt;
        }
    }
    return std::nullopt;
}

// ---- congruences ---------------------------------------------------------------

struct CongruenceReport {
    std::size_t n_max = 0;
    std::vector<std::pair<std::size_t, BigInt>> failures;  // (n, nonzero residue mod n)
    // (p, r, nonzero residue of c_{p^r} - c_{p^{r-1}} mod p^r)
    std::vector<std::tuple<std::uint64_t, unsigned, BigInt>> euler_failures;
};

/// Divisor sums sum_{d|n} mu(n/d) c_d mod n, over 1 <= n <= n_max.
inline std::vector<std::pair<std::size_t, BigInt>> gauss_congruence_check(
    const std::vector<BigInt>& values, std::size_t n_max) {
    if (n_max > values.size()) throw Error("gauss check needs values through n_max");
    std::vector<std::pair<std::size_t, BigInt>> failures;
    for (std::size_t n = 1; n <= n_max; ++n) {
        BigInt acc(0);
        for (const auto d : divisors(n)) acc += BigInt(mobius(n / d)) * values[d - 1];
        BigInt residue = acc % BigInt(static_cast<long>(n));
        if (residue < 0) residue += static_cast<long>(n);
        if (residue != 0) failures.emplace_back(n, residue);
    }
    return failures;
}

inline std::vector<std::pair<std::size_t, BigInt>> gauss_congruence_check(const CountSequence& c,
                                                                          std::size_t n_max) {
    return gauss_congruence_check(c.values(), n_max);
}

/// Residues (c_{p^r} - c_{p^{r-1}}) mod p^r for r = 1..r_max.
inline std::vector<BigInt> euler_congruence_check(const std::vector<BigInt>& values,
                                                  std::uint64_t p, unsigned r_max) {
    if (!is_prime(p)) throw Error("euler check needs a prime p");
    std::vector<BigInt> out;
    BigInt pr(1);
    for (unsigned r = 1; r <= r_max; ++r) {
        pr *= p;
        const BigInt prev = (r == 1) ? BigInt(1) : pr / p;
        if (pr > BigInt(values.size())) throw Error("euler check exceeds the computed range");
        const std::size_t hi = static_cast<std::size_t>(pr);
        const std::size_t lo = static_cast<std::size_t>(prev);
        BigInt residue = (values[hi - 1] - values[lo - 1]) % pr;
        if (residue < 0) residue += pr;
        out.push_back(residue);
    }
    return out;
}

inline std::vector<BigInt> euler_congruence_check(const CountSequence& c, std::uint64_t p,
                                                  unsigned r_max) {
    return euler_congruence_check(c.values(), p, r_max);
}

/// Full report: Gauss failures through n_max plus Euler failures at every
/// prime power p^r <= n_max.
inline CongruenceReport congruence_report(const std::vector<BigInt>& values, std::size_t n_max) {
    CongruenceReport out;
    out.n_max = n_max;
    out.failures = gauss_congruence_check(values, n_max);
    for (const auto p : primes_up_to(n_max)) {
        unsigned r_max = 0;
        std::uint64_t pr = 1;
        while (pr <= n_max / p) {
            pr *= p;
            ++r_max;
        }
        const auto residues = euler_congruence_check(values, p, r_max);
        for (unsigned r = 1; r <= r_max; ++r)
            if (residues[r - 1] != 0) out.euler_failures.emplace_back(p, r, residues[r - 1]);
    }
    return out;
}

// ---- asymptotic trichotomy -------------------------------------------------------

inline constexpr std::size_t kRootOfUnityBound = 360;

struct TrichotomyVerdict {
    enum class Case { AllZero, PeriodicLimitSet, IntervalCandidate } kind = Case::AllZero;
    std::size_t period = 0;            // q, for PeriodicLimitSet
    std::vector<double> limit_values;  // v_j = sum over dominant chi_i eps_i^j
    std::size_t search_bound = 0;      // K, for IntervalCandidate
    SpectralData spectral;
    // Exact certificate for the candidate case: an isolated dominant factor
    // that divides no z^k - 1 with k <= search_bound.
    bool certified = false;
    IntPoly dominant_factor;
};

namespace detail {

/// Smallest k <= bound with |eps^k - 1| <= 1e-9, or 0 when none exists.
inline std::size_t root_of_unity_order(const std::complex<double>& eps, std::size_t bound) {
    std::complex<double> acc(1.0, 0.0);
    for (std::size_t k = 1; k <= bound; ++k) {
        acc *= eps;
        if (std::abs(acc - std::complex<double>(1.0, 0.0)) <= 1e-9) return k;
    }
    return 0;
}

}  // namespace detail

/**
 * Asymptotics of c_n / lambda_max^n for a rational zeta: all zero, a periodic
 * limit set when every dominant ratio is a root of unity (bounded search
 * k <= 360), or an interval candidate otherwise.
 */
inline TrichotomyVerdict trichotomy_classify(const CountSequence& c) {
    const ZetaReport rep = reconstruct_zeta(c);
    if (rep.verdict != ZetaVerdict::Rational)
        throw RequiresRationalZeta("trichotomy needs a rational zeta function");
    TrichotomyVerdict out;
    out.spectral = spectral_from_rational(std::get<RationalForm>(rep.form).f);

    bool all_zero = true;
    for (std::size_t n = 1; n <= c.n_max() && all_zero; ++n) all_zero = (c.at(n) == 0);
    if (all_zero) {
        out.kind = TrichotomyVerdict::Case::AllZero;
        return out;
    }

    const double lambda_max = out.spectral.lambda_max;
    std::vector<std::size_t> orders;
    bool periodic = true;
    for (const auto idx : out.spectral.dominant_indices) {
        const std::complex<double> eps = out.spectral.pairs[idx].lambda / lambda_max;
        const std::size_t k = detail::root_of_unity_order(eps, kRootOfUnityBound);
        if (k == 0) {
            periodic = false;
            break;
        }
        orders.push_back(k);
    }

    if (periodic) {
        std::uint64_t q = 1;
        for (const auto k : orders) q = lcm_u64(q, k);
        out.kind = TrichotomyVerdict::Case::PeriodicLimitSet;
        out.period = static_cast<std::size_t>(q);
        for (std::size_t j = 0; j < out.period; ++j) {
            std::complex<double> v(0.0, 0.0);
            for (const auto idx : out.spectral.dominant_indices) {
                const auto& pair = out.spectral.pairs[idx];
                v += static_cast<double>(pair.chi) *
                     std::pow(pair.lambda / lambda_max, static_cast<double>(j));
            }
            out.limit_values.push_back(v.real());
        }
        return out;
    }

    out.kind = TrichotomyVerdict::Case::IntervalCandidate;
    out.search_bound = kRootOfUnityBound;
    // Isolate a dominant conjugate pair as an exact quadratic when possible.
    if (out.spectral.dominant_indices.size() == 2) {
        const auto& l0 = out.spectral.pairs[out.spectral.dominant_indices[0]].lambda;
        const auto& l1 = out.spectral.pairs[out.spectral.dominant_indices[1]].lambda;
        if (std::abs(l0 - std::conj(l1)) <= 1e-8 * std::max(1.0, std::abs(l0))) {
            const long s = std::lround((l0 + l1).real());
            const long prod = std::lround((l0 * l1).real());
            const IntPoly quad{BigInt(prod), BigInt(-s), BigInt(1)};
            if (divides(quad, out.spectral.recurrence_poly)) {
                out.dominant_factor = quad;
                bool never = true;
                for (std::size_t k = 1; k <= kRootOfUnityBound && never; ++k)
                    never = !divides(quad, cyclotomic_span(k));
                out.certified = never;
            }
        }
    }
    return out;
}

// ---- entropy cross-check ----------------------------------------------------------

struct EntropyCheck {
    double s_infty;  // empirical growth of the counts
    double exp_h;    // product of expanding eigenvalue moduli of B^{-1}A
    bool agree;      // relative difference within 5%
};

/**
 * For commuting A, B with B unimodular and B^{-1}A hyperbolic, the count
 * growth must match exp h = prod max(1, |mu_i|) over eigenvalues of B^{-1}A.
 */
inline EntropyCheck entropy_cross_check(const ToralPair& m, std::size_t n_window = kDefaultOrder) {
    m.validate();
    if (!commutes(m.a, m.b)) throw NotCommuting("entropy cross-check needs AB = BA");
    const BigInt det_b = det(m.b);
    if (det_b != 1 && det_b != -1) throw HypothesisViolated("B must be unimodular");
    const IntMat quotient = inverse_unimodular(m.b) * m.a;

    const CountSequence c = counts_toral(m, n_window);
    if (const std::size_t bad = c.first_non_tame()) throw NotTame(bad);

    double exp_h = 1.0;
    for (const auto& mu : poly_roots(char_poly(quotient))) {
        const double mod = std::abs(mu);
        if (std::abs(mod - 1.0) <= 1e-6) throw NotHyperbolic("eigenvalue on the unit circle");
        exp_h *= std::max(1.0, mod);
    }

    const GrowthReport growth = growth_estimate(c);
    if (growth.degenerate) throw NotTame();
    const double s_infty = growth.upper;
    return {s_infty, exp_h, std::abs(s_infty - exp_h) / exp_h <= 0.05};
}

// ---- Lefschetz zeta and torsion ------------------------------------------------------

/// prod_k det(I - h_k z)^{(-1)^{k+1}} as an exact rational function.
inline RationalFunction lefschetz_zeta(const HomologyData& h) {
    h.validate();
    IntPoly num = IntPoly::one(), den = IntPoly::one();
    for (const auto& e : h.entries) {
        const IntPoly f = det_identity_minus_z(e.h);
        if (e.degree % 2 == 0) den = den * f;
        else num = num * f;
    }
    return RationalFunction(num, den);
}

struct SignRelation {
    std::size_t p = 0;  // real eigenvalues mu < -1
    std::size_t r = 0;  // real eigenvalues with |mu| > 1
    bool check = false; // |det(I - F^n)| = (-1)^{r + pn} det(I - F^n) on the window
};

/// Sign bookkeeping of det(I - F^n) for a hyperbolic integer matrix F,
/// verified exactly over 1 <= n <= n_check.
inline SignRelation nilpotent_sign_relation(const IntMat& f, std::size_t n_check = 24) {
    SignRelation out;
    for (const auto& rm : roots_with_multiplicity(char_poly(f))) {
        if (std::abs(std::abs(rm.root) - 1.0) <= 1e-6)
            throw NotHyperbolic("eigenvalue on the unit circle");
        if (!is_real_root(rm.root)) continue;
        if (rm.root.real() < -1.0) out.p += rm.multiplicity;
        if (std::abs(rm.root.real()) > 1.0) out.r += rm.multiplicity;
    }
    out.check = true;
    for (std::size_t n = 1; n <= n_check && out.check; ++n) {
        const BigInt d = det(IntMat::identity(f.rows()) - f.pow(n));
        const bool negative = (out.r + out.p * n) % 2 == 1;
        out.check = negative ? (d < 0) : (d > 0);
    }
    return out;
}

struct TorsionValue {
    std::complex<double> lambda;
    double tau = 0.0;            // |L(lambda)|^{-1}
    std::optional<BigRat> exact; // set for lambda = +-1
};

/// Exact special value at lambda = +-1.
inline TorsionValue torsion_special_value(const HomologyData& h, const BigRat& lambda) {
    if (lambda != 1 && lambda != -1) throw Error("exact torsion evaluation needs lambda = +-1");
    const RationalFunction l = lefschetz_zeta(h);
    const BigRat num = to_rat(l.num()).evaluate(lambda);
    const BigRat den = to_rat(l.den()).evaluate(lambda);
    if (den == 0) throw TorsionUndefined("pole of the Lefschetz zeta at lambda");
    if (num == 0) throw TorsionUndefined("zero of the Lefschetz zeta at lambda");
    const BigRat tau = abs_rat(den / num);
    TorsionValue out;
    out.lambda = std::complex<double>(static_cast<double>(lambda), 0.0);
    out.tau = static_cast<double>(tau);
    out.exact = tau;
    return out;
}

/// Numeric special value at a unit-circle lambda.
inline TorsionValue torsion_special_value(const HomologyData& h, const std::complex<double>& lambda) {
    const RationalFunction l = lefschetz_zeta(h);
    const std::complex<double> num = l.num().evaluate_complex(lambda);
    const std::complex<double> den = l.den().evaluate_complex(lambda);
    if (std::abs(den) <= 1e-12) throw TorsionUndefined("pole of the Lefschetz zeta at lambda");
    if (std::abs(num) <= 1e-12) throw TorsionUndefined("zero of the Lefschetz zeta at lambda");
    TorsionValue out;
    out.lambda = lambda;
    out.tau = std::abs(den) / std::abs(num);
    return out;
}

struct TorsionReport {
    RationalFunction lefschetz;
    std::size_t p = 0, r = 0;  // from the degree-1 matrix when present
    bool sign_check = false;
    std::vector<TorsionValue> tau_values;
};

/// Bundle for reporting: the zeta form, the sign data of the degree-1
/// matrix (the linearization for toral and nilmanifold data), and tau at
/// the sampled holonomies (always lambda = -1, plus the callers' extras).
inline TorsionReport torsion_report(const HomologyData& h,
                                    const std::vector<std::complex<double>>& extra_lambdas = {}) {
    TorsionReport out;
    out.lefschetz = lefschetz_zeta(h);
    for (const auto& e : h.entries) {
        if (e.degree != 1) continue;
        const SignRelation sr = nilpotent_sign_relation(e.h);
        out.p = sr.p;
        out.r = sr.r;
        out.sign_check = sr.check;
    }
    out.tau_values.push_back(torsion_special_value(h, BigRat(-1)));
    for (const auto& l : extra_lambdas) out.tau_values.push_back(torsion_special_value(h, l));
    return out;
}

}  // namespace synczeta
