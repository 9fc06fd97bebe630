#pragma once

/**
 * @file json_io.hpp
 * @brief Model descriptions and analysis reports as JSON ("synczeta/1").
 *
 * Model files carry integer payloads as JSON numbers, switching to decimal
 * strings past 53-bit safety; report payloads serialize big integers as
 * decimal strings unconditionally and floats with 15 significant digits.
 */

#include <complex>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "synczeta/analysis.hpp"

namespace synczeta {

using nlohmann::json;

inline constexpr const char* kSchemaTag = "synczeta/1";

// ---- primitives -------------------------------------------------------------

inline BigInt bigint_from_json(const json& j) {
    if (j.is_number_integer()) return BigInt(j.get<long long>());
    if (j.is_string()) return BigInt(j.get<std::string>());
    throw Error("expected an integer or a decimal string");
}

/// Numbers up to 53 bits stay numbers; larger values become strings.
inline json bigint_to_model_json(const BigInt& v) {
    static const BigInt kSafe = pow_int(BigInt(2), 53);
    if (abs_int(v) < kSafe) return json(static_cast<long long>(v));
    return json(v.str());
}

inline json bigint_to_report_json(const BigInt& v) { return json(v.str()); }

inline json bigrat_to_report_json(const BigRat& q) {
    if (is_integer(q)) return json(numerator(q).str());
    return json(numerator(q).str() + "/" + denominator(q).str());
}

/// Round through a 15-significant-digit decimal so reports are byte-stable.
inline json float_to_json(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", x);
    return json(std::strtod(buf, nullptr));
}

inline IntMat intmat_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw Error("expected a matrix as an array of rows");
    std::vector<std::vector<BigInt>> rows;
    for (const auto& row : j) {
        if (!row.is_array()) throw Error("expected a matrix row");
        std::vector<BigInt> r;
        for (const auto& v : row) r.push_back(bigint_from_json(v));
        rows.push_back(std::move(r));
    }
    return IntMat(std::move(rows));
}

inline json intmat_to_json(const IntMat& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(bigint_to_model_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline json intpoly_to_report_json(const IntPoly& p) {
    json out = json::array();
    for (const auto& c : p.coeffs()) out.push_back(bigint_to_report_json(c));
    return out;
}

// ---- models -----------------------------------------------------------------

inline DynModel model_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind")) throw Error("model needs a \"kind\" discriminator");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "finite_maps") {
        FiniteMaps m{j.at("sigma1").get<std::vector<std::size_t>>(),
                     j.at("sigma2").get<std::vector<std::size_t>>()};
        m.validate();
        return m;
    }
    if (kind == "circle_power")
        return CirclePower{j.at("d_alpha").get<long>(), j.at("d_beta").get<long>()};
    if (kind == "toral_pair") {
        ToralPair m{intmat_from_json(j.at("a")), intmat_from_json(j.at("b"))};
        m.validate();
        return m;
    }
    if (kind == "s_integer_pair") {
        SIntegerPair m{bigint_from_json(j.at("a")), bigint_from_json(j.at("b")),
                       j.at("primes").get<std::vector<std::uint64_t>>()};
        m.validate();
        return m;
    }
    if (kind == "subshift") {
        Subshift m{intmat_from_json(j.at("matrix"))};
        m.validate();
        return m;
    }
    if (kind == "signed_subshift_system") {
        SignedSubshiftSystem m;
        for (const auto& t : j.at("terms"))
            m.terms.push_back({intmat_from_json(t.at("matrix")), t.at("sign").get<int>()});
        m.validate();
        return m;
    }
    if (kind == "homology_data") {
        HomologyData m;
        for (const auto& e : j.at("entries"))
            m.entries.push_back({e.at("degree").get<std::size_t>(), intmat_from_json(e.at("matrix"))});
        m.validate();
        return m;
    }
    throw Error("unknown model kind \"" + kind + "\"");
}

inline json model_to_json(const DynModel& model) {
    json j;
    j["kind"] = model_kind(model);
    struct V {
        json& j;
        void operator()(const FiniteMaps& m) const {
            j["sigma1"] = m.sigma1;
            j["sigma2"] = m.sigma2;
        }
        void operator()(const CirclePower& m) const {
            j["d_alpha"] = m.d_alpha;
            j["d_beta"] = m.d_beta;
        }
        void operator()(const ToralPair& m) const {
            j["a"] = intmat_to_json(m.a);
            j["b"] = intmat_to_json(m.b);
        }
        void operator()(const SIntegerPair& m) const {
            j["a"] = bigint_to_model_json(m.a);
            j["b"] = bigint_to_model_json(m.b);
            j["primes"] = m.primes;
        }
        void operator()(const Subshift& m) const { j["matrix"] = intmat_to_json(m.a); }
        void operator()(const SignedSubshiftSystem& m) const {
            json terms = json::array();
            for (const auto& t : m.terms)
                terms.push_back({{"matrix", intmat_to_json(t.a)}, {"sign", t.sign}});
            j["terms"] = std::move(terms);
        }
        void operator()(const HomologyData& m) const {
            json entries = json::array();
            for (const auto& e : m.entries)
                entries.push_back({{"degree", e.degree}, {"matrix", intmat_to_json(e.h)}});
            j["entries"] = std::move(entries);
        }
    };
    std::visit(V{j}, model);
    return j;
}

// ---- reports ----------------------------------------------------------------

inline json counts_to_json(const CountSequence& c) {
    json counts = json::array(), tame = json::array();
    for (std::size_t n = 1; n <= c.n_max(); ++n) {
        tame.push_back(c.tame_at(n));
        counts.push_back(c.tame_at(n) ? bigint_to_report_json(c.at(n)) : json(nullptr));
    }
    return {{"n_max", c.n_max()}, {"counts", std::move(counts)}, {"tame", std::move(tame)}};
}

inline json rational_function_to_json(const RationalFunction& f) {
    return {{"num", intpoly_to_report_json(f.num())}, {"den", intpoly_to_report_json(f.den())}};
}

inline json series_to_json(const PowerSeries& s, std::size_t max_terms = 0) {
    const std::size_t hi = max_terms ? std::min(max_terms, s.order()) : s.order();
    json out = json::array();
    for (std::size_t k = 0; k <= hi; ++k) out.push_back(bigrat_to_report_json(s[k]));
    return out;
}

inline json zeta_report_to_json(const ZetaReport& rep) {
    json j;
    j["verdict"] = to_string(rep.verdict);
    if (std::holds_alternative<RationalForm>(rep.form)) {
        j["rational"] = rational_function_to_json(std::get<RationalForm>(rep.form).f);
    } else if (std::holds_alternative<CycleProduct>(rep.form)) {
        json orbits = json::array();
        for (const auto& [len, mult] : std::get<CycleProduct>(rep.form).orbits)
            orbits.push_back({len, mult});
        j["cycle_product"] = std::move(orbits);
    } else if (std::holds_alternative<ResidueData>(rep.form)) {
        const auto& rd = std::get<ResidueData>(rep.form);
        json residues = json::array();
        for (const auto& ck : rd.residues)
            residues.push_back({float_to_json(ck.real()), float_to_json(ck.imag())});
        json a = json::array(), b = json::array();
        for (const auto& v : rd.a_coeffs) a.push_back(float_to_json(v));
        for (const auto& v : rd.b_coeffs) b.push_back(float_to_json(v));
        j["residue_form"] = {{"period", rd.period},
                             {"residues", std::move(residues)},
                             {"a", std::move(a)},
                             {"b", std::move(b)},
                             {"q", intpoly_to_report_json(rd.q_part)},
                             {"r", intpoly_to_report_json(rd.r_part)},
                             {"preperiod", rd.ep.preperiod}};
        if (rd.rational_equivalent)
            j["rational"] = rational_function_to_json(*rd.rational_equivalent);
    } else {
        j["series"] = series_to_json(rep.series);
    }
    return j;
}

inline json spectral_to_json(const SpectralData& sd) {
    json pairs = json::array();
    for (const auto& p : sd.pairs)
        pairs.push_back({{"chi", p.chi},
                         {"lambda", {float_to_json(p.lambda.real()), float_to_json(p.lambda.imag())}}});
    return {{"pairs", std::move(pairs)},
            {"recurrence_poly", intpoly_to_report_json(sd.recurrence_poly)},
            {"lambda_max", float_to_json(sd.lambda_max)},
            {"dominant_indices", sd.dominant_indices}};
}

inline json growth_to_json(const GrowthReport& g) {
    json j{{"upper", float_to_json(g.upper)},
           {"lower", float_to_json(g.lower)},
           {"degenerate", g.degenerate},
           {"zero_indices", g.zero_indices},
           {"window", {g.window_begin, g.window_end}}};
    if (g.exact) {
        j["exact"] = bigrat_to_report_json(*g.exact);
        j["exact_description"] = g.exact_description;
    }
    return j;
}

inline json congruence_to_json(const CongruenceReport& rep) {
    json failures = json::array();
    for (const auto& [n, residue] : rep.failures)
        failures.push_back({n, bigint_to_report_json(residue)});
    json euler = json::array();
    for (const auto& [p, r, residue] : rep.euler_failures)
        euler.push_back({p, r, bigint_to_report_json(residue)});
    return {{"n_max", rep.n_max},
            {"failures", std::move(failures)},
            {"euler_failures", std::move(euler)}};
}

inline json trichotomy_to_json(const TrichotomyVerdict& v) {
    json j;
    switch (v.kind) {
        case TrichotomyVerdict::Case::AllZero: j["case"] = "AllZero"; break;
        case TrichotomyVerdict::Case::PeriodicLimitSet: j["case"] = "PeriodicLimitSet"; break;
        case TrichotomyVerdict::Case::IntervalCandidate: j["case"] = "IntervalCandidate"; break;
    }
    if (v.kind == TrichotomyVerdict::Case::PeriodicLimitSet) {
        j["period"] = v.period;
        json values = json::array();
        for (const auto& x : v.limit_values) values.push_back(float_to_json(x));
        j["values"] = std::move(values);
    }
    if (v.kind == TrichotomyVerdict::Case::IntervalCandidate) {
        j["bound"] = v.search_bound;
        j["certified"] = v.certified;
        if (!v.dominant_factor.is_zero())
            j["dominant_factor"] = intpoly_to_report_json(v.dominant_factor);
    }
    j["spectral"] = spectral_to_json(v.spectral);
    return j;
}

inline json torsion_to_json(const TorsionReport& rep) {
    json taus = json::array();
    for (const auto& t : rep.tau_values) {
        json e{{"lambda", {float_to_json(t.lambda.real()), float_to_json(t.lambda.imag())}},
               {"tau", float_to_json(t.tau)}};
        if (t.exact) e["exact"] = bigrat_to_report_json(*t.exact);
        taus.push_back(std::move(e));
    }
    return {{"lefschetz", rational_function_to_json(rep.lefschetz)},
            {"p", rep.p},
            {"r", rep.r},
            {"sign_check", rep.sign_check},
            {"tau", std::move(taus)}};
}

inline json boundary_to_json(const BoundaryVerdict& v) {
    json witnesses = json::array();
    for (const auto& w : v.witnesses) witnesses.push_back({{"p", w.p}, {"reason", w.reason}});
    return {{"verdict", v.verdict == Dichotomy::NaturalBoundary ? "NaturalBoundary" : "Rational"},
            {"witnesses", std::move(witnesses)}};
}

// ---- CSV --------------------------------------------------------------------

/// Rows n,count,root_n with exact decimal counts and 15-digit roots; the
/// root column is left empty at zero counts.
inline void emit_series_csv(const CountSequence& c, std::ostream& os) {
    if (const std::size_t bad = c.first_non_tame()) throw NotTame(bad);
    os << "n,count,root_n\n";
    for (std::size_t n = 1; n <= c.n_max(); ++n) {
        os << n << "," << c.at(n).str() << ",";
        if (c.at(n) != 0) {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.15g", nth_root(c.at(n), n));
            os << buf;
        }
        os << "\n";
    }
}

inline void emit_series_csv(const CountSequence& c, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw Error("cannot open " + path + " for writing");
    emit_series_csv(c, os);
    if (!os.good()) throw Error("write to " + path + " failed");
}

}  // namespace synczeta
