#pragma once

/**
 * @file spectral.hpp
 * @brief Spectral data (chi_i, lambda_i) extracted from a rational zeta form,
 *        so that c_n = sum_i chi_i lambda_i^n.
 *
 * Multiplicities are exact (squarefree decomposition and repeated division);
 * only the root positions are numeric.
 */

#include <complex>
#include <vector>

#include "synczeta/models.hpp"
#include "synczeta/rational_function.hpp"
#include "synczeta/roots.hpp"

namespace synczeta {

struct SpectralPair {
    long chi;                    // positive for poles of the zeta form, negative for zeros
    std::complex<double> lambda; // reciprocal of the corresponding root
};

struct SpectralData {
    std::vector<SpectralPair> pairs;
    IntPoly recurrence_poly;  // primitive integer polynomial with roots {lambda_i}
    double lambda_max = 0.0;
    std::vector<std::size_t> dominant_indices;
};

/**
 * Poles of F = prod (1 - lambda_i z)^{-chi_i} sit at 1/lambda_i with exponent
 * chi_i > 0, zeros with chi_i < 0. Requires the zeta normalization F(0) = 1.
 */
inline SpectralData spectral_from_rational(const RationalFunction& f) {
    if (f.num()[0] != 1 || f.den()[0] != 1)
        throw NotNormalized("spectral extraction needs F(0) = 1");
    SpectralData out;
    auto harvest = [&out](const IntPoly& poly, int orientation) {
        const auto factors = squarefree_decomposition(to_rat(poly));
        for (std::size_t m = 0; m < factors.size(); ++m)
            for (const auto& root : detail::durand_kerner(factors[m]))
                out.pairs.push_back(
                    {orientation * static_cast<long>(m + 1), std::complex<double>(1.0, 0.0) / root});
    };
    harvest(f.den(), +1);
    harvest(f.num(), -1);

    const RatPoly rad = radical(to_rat(f.num() * f.den()));
    out.recurrence_poly = rad.degree() <= 0 ? IntPoly::one() : primitive_from_rat(rad.reciprocal());

    for (const auto& p : out.pairs) out.lambda_max = std::max(out.lambda_max, std::abs(p.lambda));
    for (std::size_t i = 0; i < out.pairs.size(); ++i)
        if (std::abs(out.pairs[i].lambda) >= out.lambda_max * (1.0 - 1e-9))
            out.dominant_indices.push_back(i);
    return out;
}

/// Reproduction check: |sum chi lambda^n - c_n| <= 1e-6 lambda_max^n over the
/// whole window; an empty spectrum must reproduce the zero sequence exactly.
inline bool verify_spectral(const SpectralData& sd, const CountSequence& c) {
    for (std::size_t n = 1; n <= c.n_max(); ++n) {
        if (!c.tame_at(n)) return false;
        if (sd.pairs.empty()) {
            if (c.at(n) != 0) return false;
            continue;
        }
        std::complex<double> acc(0.0, 0.0);
        for (const auto& p : sd.pairs)
            acc += static_cast<double>(p.chi) * std::pow(p.lambda, static_cast<double>(n));
        const double want = static_cast<double>(BigRat(c.at(n)));
        const double tol = 1e-6 * std::pow(sd.lambda_max, static_cast<double>(n));
        if (std::abs(acc.real() - want) > tol || std::abs(acc.imag()) > tol) return false;
    }
    return true;
}

}  // namespace synczeta
