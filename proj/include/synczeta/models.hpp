#pragma once

/**
 * @file models.hpp
 * @brief Dynamical models with exactly computable synchronization-point
 *        counts c_n = #S(alpha^n, beta^n), and the count sequences they
 *        generate.
 *
 * A non-tame index (infinite count) is data, not an error: the sequence
 * stores an absent value there and only zeta/congruence analysis refuses
 * such sequences.
 */

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "synczeta/intmat.hpp"
#include "synczeta/padic.hpp"

namespace synczeta {

// ---- model kinds -----------------------------------------------------------

/// Two total maps of {0, ..., m-1} to itself.
struct FiniteMaps {
    std::vector<std::size_t> sigma1, sigma2;

    std::size_t points() const { return sigma1.size(); }
    void validate() const {
        if (sigma1.size() != sigma2.size() || sigma1.empty())
            throw ShapeMismatch("finite maps must act on the same nonempty set");
        for (const auto& s : {sigma1, sigma2})
            for (const auto v : s)
                if (v >= s.size()) throw ShapeMismatch("map value outside the ground set");
    }
    bool is_bijection(const std::vector<std::size_t>& s) const {
        std::vector<bool> seen(s.size(), false);
        for (const auto v : s) {
            if (seen[v]) return false;
            seen[v] = true;
        }
        return true;
    }
    bool commuting() const {
        for (std::size_t x = 0; x < sigma1.size(); ++x)
            if (sigma1[sigma2[x]] != sigma2[sigma1[x]]) return false;
        return true;
    }
};

/// z -> z^d_alpha versus z -> z^d_beta on the unit circle.
struct CirclePower {
    long d_alpha, d_beta;
};

/// Pair of integer matrices acting on the d-torus.
struct ToralPair {
    IntMat a, b;
    void validate() const {
        if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
            throw ShapeMismatch("toral pair needs square matrices of equal dimension");
    }
};

/// Multiplication by a and b on the dual of Z[1/S].
struct SIntegerPair {
    BigInt a, b;
    std::vector<std::uint64_t> primes;
    void validate() const {
        if (a == 0 || b == 0) throw Error("S-integer pair needs nonzero a, b");
        for (std::size_t i = 0; i < primes.size(); ++i) {
            if (!is_prime(primes[i])) throw Error("S contains a non-prime");
            for (std::size_t j = i + 1; j < primes.size(); ++j)
                if (primes[i] == primes[j]) throw Error("S contains a repeated prime");
        }
    }
};

/// Subshift of finite type with 0/1 transition matrix.
struct Subshift {
    IntMat a;
    void validate() const {
        if (!a.is_square()) throw ShapeMismatch("transition matrix must be square");
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j)
                if (a.at(i, j) != 0 && a.at(i, j) != 1)
                    throw NotZeroOne("transition matrix entries must be 0 or 1");
    }
};

/// Signed family of subshifts: c_n = sum_i eps_i tr(A_i^n).
struct SignedSubshiftSystem {
    struct Term {
        IntMat a;
        int sign;  // +1 or -1
    };
    std::vector<Term> terms;
    void validate() const {
        if (terms.empty()) throw Error("signed system needs at least one term");
        for (const auto& t : terms) {
            Subshift{t.a}.validate();
            if (t.sign != 1 && t.sign != -1) throw Error("signs must be +1 or -1");
        }
    }
};

/// Integer matrices induced on homology, one per listed degree.
struct HomologyData {
    struct Entry {
        std::size_t degree;
        IntMat h;
    };
    std::vector<Entry> entries;
    void validate() const {
        for (std::size_t i = 0; i < entries.size(); ++i) {
            if (!entries[i].h.is_square()) throw ShapeMismatch("homology matrices must be square");
            for (std::size_t j = i + 1; j < entries.size(); ++j)
                if (entries[i].degree == entries[j].degree)
                    throw Error("repeated homology degree");
        }
    }
};

using DynModel = std::variant<FiniteMaps, CirclePower, ToralPair, SIntegerPair, Subshift,
                              SignedSubshiftSystem, HomologyData>;

inline std::string model_kind(const DynModel& m) {
    struct V {
        std::string operator()(const FiniteMaps&) const { return "finite_maps"; }
        std::string operator()(const CirclePower&) const { return "circle_power"; }
        std::string operator()(const ToralPair&) const { return "toral_pair"; }
        std::string operator()(const SIntegerPair&) const { return "s_integer_pair"; }
        std::string operator()(const Subshift&) const { return "subshift"; }
        std::string operator()(const SignedSubshiftSystem&) const { return "signed_subshift_system"; }
        std::string operator()(const HomologyData&) const { return "homology_data"; }
    };
    return std::visit(V{}, m);
}

// ---- count sequences -------------------------------------------------------

class CountSequence {
  public:
    CountSequence(std::optional<DynModel> model, std::vector<std::optional<BigInt>> counts)
        : model_(std::move(model)), counts_(std::move(counts)) {
        if (model_ && std::holds_alternative<FiniteMaps>(*model_))
            commuting_ = std::get<FiniteMaps>(*model_).commuting();
    }

    /// Sequence given directly by its values (no generating model).
    static CountSequence synthetic(std::vector<BigInt> values) {
        std::vector<std::optional<BigInt>> cs(values.size());
        for (std::size_t i = 0; i < values.size(); ++i) cs[i] = std::move(values[i]);
        return CountSequence(std::nullopt, std::move(cs));
    }

    std::size_t n_max() const { return counts_.size(); }

    /// 1-based: true iff c_n is finite.
    bool tame_at(std::size_t n) const {
        if (n == 0 || n > counts_.size()) throw Error("index outside the computed range");
        return counts_[n - 1].has_value();
    }

    bool all_tame() const {
        for (const auto& c : counts_)
            if (!c) return false;
        return true;
    }

    /// First non-tame index, or 0 when the sequence is tame throughout.
    std::size_t first_non_tame() const {
        for (std::size_t n = 1; n <= counts_.size(); ++n)
            if (!counts_[n - 1]) return n;
        return 0;
    }

    /// 1-based c_n; throws NotTame at an infinite index.
    const BigInt& at(std::size_t n) const {
        if (n == 0 || n > counts_.size()) throw Error("index outside the computed range");
        if (!counts_[n - 1]) throw NotTame(n);
        return *counts_[n - 1];
    }

    /// All values c_1..c_n_max; throws NotTame at the first infinite index.
    std::vector<BigInt> values() const {
        if (const std::size_t bad = first_non_tame()) throw NotTame(bad);
        std::vector<BigInt> out;
        out.reserve(counts_.size());
        for (const auto& c : counts_) out.push_back(*c);
        return out;
    }

    const std::optional<DynModel>& model() const { return model_; }
    /// Set for FiniteMaps models only.
    std::optional<bool> commuting() const { return commuting_; }

  private:
    std::optional<DynModel> model_;
    std::vector<std::optional<BigInt>> counts_;
    std::optional<bool> commuting_;
};

// ---- generators ------------------------------------------------------------

inline CountSequence counts_finite_maps(const FiniteMaps& m, std::size_t n_max) {
    m.validate();
    const std::size_t pts = m.points();
    std::vector<std::size_t> t1(pts), t2(pts);
    for (std::size_t x = 0; x < pts; ++x) t1[x] = t2[x] = x;
    std::vector<std::optional<BigInt>> counts;
    counts.reserve(n_max);
    for (std::size_t n = 1; n <= n_max; ++n) {
        long hits = 0;
        for (std::size_t x = 0; x < pts; ++x) {
            t1[x] = m.sigma1[t1[x]];
            t2[x] = m.sigma2[t2[x]];
            if (t1[x] == t2[x]) ++hits;
        }
        counts.emplace_back(BigInt(hits));
    }
    return CountSequence(DynModel(m), std::move(counts));
}

inline CountSequence counts_circle_power(const CirclePower& m, std::size_t n_max) {
    std::vector<std::optional<BigInt>> counts;
    counts.reserve(n_max);
    BigInt pa(1), pb(1);
    for (std::size_t n = 1; n <= n_max; ++n) {
        pa *= m.d_alpha;
        pb *= m.d_beta;
        if (pa == pb) counts.emplace_back(std::nullopt);
        else counts.emplace_back(abs_int(pa - pb));
    }
    return CountSequence(DynModel(m), std::move(counts));
}

inline CountSequence counts_toral(const ToralPair& m, std::size_t n_max) {
    m.validate();
    std::vector<std::optional<BigInt>> counts;
    counts.reserve(n_max);
    IntMat an = IntMat::identity(m.a.rows()), bn = an;
    for (std::size_t n = 1; n <= n_max; ++n) {
        an = an * m.a;
        bn = bn * m.b;
        const BigInt d = det(an - bn);
        if (d == 0) counts.emplace_back(std::nullopt);
        else counts.emplace_back(abs_int(d));
    }
    return CountSequence(DynModel(m), std::move(counts));
}

/// Independent toral count through the lattice quotient: the product of the
/// Smith elementary divisors of A^n - B^n.
inline BigInt counts_toral_oracle(const ToralPair& m, std::size_t n) {
    m.validate();
    const IntMat diff = m.a.pow(n) - m.b.pow(n);
    BigInt card(1);
    for (const auto& d : smith_normal_form(diff)) {
        if (d == 0) throw NotTame(n);
        card *= d;
    }
    return card;
}

inline CountSequence counts_s_integer(const SIntegerPair& m, std::size_t n_max) {
    m.validate();
    std::vector<std::optional<BigInt>> counts;
    counts.reserve(n_max);
    BigInt pa(1), pb(1);
    for (std::size_t n = 1; n <= n_max; ++n) {
        pa *= m.a;
        pb *= m.b;
        if (pa == pb) {
            counts.emplace_back(std::nullopt);
            continue;
        }
        BigInt c = abs_int(pa - pb);
        for (const auto p : m.primes) {
            const BigInt q = pow_int(BigInt(p), static_cast<std::size_t>(ord_p(c, p)));
            if (c % q != 0) throw NonIntegralCount("p-part does not divide the count");
            c /= q;
        }
        counts.emplace_back(std::move(c));
    }
    return CountSequence(DynModel(m), std::move(counts));
}

inline CountSequence counts_subshift(const Subshift& m, std::size_t n_max) {
    m.validate();
    std::vector<std::optional<BigInt>> counts;
    counts.reserve(n_max);
    IntMat an = IntMat::identity(m.a.rows());
    for (std::size_t n = 1; n <= n_max; ++n) {
        an = an * m.a;
        counts.emplace_back(an.trace());
    }
    return CountSequence(DynModel(m), std::move(counts));
}

inline CountSequence counts_signed_system(const SignedSubshiftSystem& m, std::size_t n_max) {
    m.validate();
    std::vector<IntMat> powers;
    powers.reserve(m.terms.size());
    for (const auto& t : m.terms) powers.push_back(IntMat::identity(t.a.rows()));
    std::vector<std::optional<BigInt>> counts;
    counts.reserve(n_max);
    for (std::size_t n = 1; n <= n_max; ++n) {
        BigInt c(0);
        for (std::size_t i = 0; i < m.terms.size(); ++i) {
            powers[i] = powers[i] * m.terms[i].a;
            c += BigInt(m.terms[i].sign) * powers[i].trace();
        }
        if (c < 0) throw InconsistentSignedSystem(n);
        counts.emplace_back(std::move(c));
    }
    return CountSequence(DynModel(m), std::move(counts));
}

/// Alternating-trace numbers L(h^n); signed, so not a CountSequence.
inline std::vector<BigInt> lefschetz_counts(const HomologyData& m, std::size_t n_max) {
    m.validate();
    std::vector<IntMat> powers;
    powers.reserve(m.entries.size());
    for (const auto& e : m.entries) powers.push_back(IntMat::identity(e.h.rows()));
    std::vector<BigInt> out;
    out.reserve(n_max);
    for (std::size_t n = 1; n <= n_max; ++n) {
        BigInt l(0);
        for (std::size_t i = 0; i < m.entries.size(); ++i) {
            powers[i] = powers[i] * m.entries[i].h;
            const BigInt t = powers[i].trace();
            l += (m.entries[i].degree % 2 == 0) ? t : BigInt(-t);
        }
        out.push_back(std::move(l));
    }
    return out;
}

/// Generate the count sequence of any model kind except HomologyData,
/// whose Lefschetz numbers may be negative.
inline CountSequence counts(const DynModel& model, std::size_t n_max) {
    struct V {
        std::size_t n_max;
        CountSequence operator()(const FiniteMaps& m) const { return counts_finite_maps(m, n_max); }
        CountSequence operator()(const CirclePower& m) const { return counts_circle_power(m, n_max); }
        CountSequence operator()(const ToralPair& m) const { return counts_toral(m, n_max); }
        CountSequence operator()(const SIntegerPair& m) const { return counts_s_integer(m, n_max); }
        CountSequence operator()(const Subshift& m) const { return counts_subshift(m, n_max); }
        CountSequence operator()(const SignedSubshiftSystem& m) const {
            return counts_signed_system(m, n_max);
        }
        CountSequence operator()(const HomologyData&) const {
            throw Error("homology data yields signed Lefschetz numbers, not counts");
        }
    };
    return std::visit(V{n_max}, model);
}

// ---- eventual periodicity for finite maps -----------------------------------

namespace detail {

struct FunctionalGraphBounds {
    std::size_t max_tail;      // iterates agree as functions from here on
    std::uint64_t cycle_lcm;   // lcm of core cycle lengths
};

inline FunctionalGraphBounds graph_bounds(const std::vector<std::size_t>& sigma) {
    const std::size_t m = sigma.size();
    FunctionalGraphBounds out{0, 1};
    for (std::size_t x = 0; x < m; ++x) {
        std::vector<std::size_t> seen_at(m, static_cast<std::size_t>(-1));
        std::size_t cur = x, step = 0;
        while (seen_at[cur] == static_cast<std::size_t>(-1)) {
            seen_at[cur] = step++;
            cur = sigma[cur];
        }
        const std::size_t tail = seen_at[cur];
        const std::size_t cycle = step - tail;
        out.max_tail = std::max(out.max_tail, tail);
        out.cycle_lcm = lcm_u64(out.cycle_lcm, cycle);
    }
    return out;
}

}  // namespace detail

struct EventualPeriod {
    std::size_t preperiod;  // minimal n0 >= 1 with c_{n+L} = c_n for all n >= n0
    std::size_t period;     // minimal L
};

/// Horizon that makes detect_eventual_period provably correct for the model.
inline std::size_t required_horizon(const FiniteMaps& m) {
    m.validate();
    const auto b1 = detail::graph_bounds(m.sigma1);
    const auto b2 = detail::graph_bounds(m.sigma2);
    const std::size_t n0_bound = std::max<std::size_t>(1, std::max(b1.max_tail, b2.max_tail));
    const std::size_t l_bound = static_cast<std::size_t>(lcm_u64(b1.cycle_lcm, b2.cycle_lcm));
    return n0_bound + 2 * l_bound - 1;
}

/**
 * Minimal (n0, L) with c_{n+L} = c_n for all n >= n0. The iterate structure
 * of both maps bounds the preperiod and period, so a sequence long enough to
 * cover that bound decides the answer exactly; shorter input is an error.
 */
inline EventualPeriod detect_eventual_period(const CountSequence& c) {
    if (!c.model() || !std::holds_alternative<FiniteMaps>(*c.model()))
        throw Error("eventual-period detection needs a FiniteMaps sequence");
    const FiniteMaps& m = std::get<FiniteMaps>(*c.model());
    const auto b1 = detail::graph_bounds(m.sigma1);
    const auto b2 = detail::graph_bounds(m.sigma2);
    const std::size_t n0_bound = std::max<std::size_t>(1, std::max(b1.max_tail, b2.max_tail));
    const std::size_t l_bound = static_cast<std::size_t>(lcm_u64(b1.cycle_lcm, b2.cycle_lcm));
    const std::size_t horizon = n0_bound + 2 * l_bound - 1;
    if (c.n_max() < horizon) throw HorizonTooSmall(horizon);

    std::size_t period = l_bound;
    for (std::uint64_t d = 1; d <= l_bound; ++d) {
        if (l_bound % d != 0) continue;
        bool ok = true;
        for (std::size_t n = n0_bound; n < n0_bound + l_bound && ok; ++n)
            ok = (c.at(n + d) == c.at(n));
        if (ok) {
            period = static_cast<std::size_t>(d);
            break;
        }
    }
    std::size_t preperiod = n0_bound;
    while (preperiod > 1 && c.at(preperiod - 1 + period) == c.at(preperiod - 1)) --preperiod;
    return {preperiod, period};
}

}  // namespace synczeta
