#pragma once

/**
 * @file roots.hpp
 * @brief Numeric roots of exact integer polynomials by simultaneous
 *        (Durand-Kerner) iteration.
 *
 * Multiplicities are extracted exactly first (squarefree decomposition over
 * the rationals), so the iteration only ever sees simple roots and keeps its
 * quadratic convergence.
 */

#include <complex>
#include <cstddef>
#include <vector>

#include "synczeta/polynomial.hpp"

namespace synczeta {

inline constexpr double kRootTolerance = 1e-12;
inline constexpr int kRootMaxIterations = 200;

struct RootWithMultiplicity {
    std::complex<double> root;
    std::size_t multiplicity;
};

namespace detail {

/// Durand-Kerner on a squarefree polynomial given by exact rational coefficients.
inline std::vector<std::complex<double>> durand_kerner(const RatPoly& p) {
    const long deg = p.degree();
    if (deg <= 0) return {};
    std::vector<std::complex<double>> c(static_cast<std::size_t>(deg) + 1);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = std::complex<double>(static_cast<double>(p[i] / p.leading()), 0.0);

    double radius = 0.0;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) radius = std::max(radius, std::abs(c[i]));
    radius = 1.0 + radius;

    const std::complex<double> seed(0.4, 0.9);
    std::vector<std::complex<double>> w(static_cast<std::size_t>(deg));
    std::complex<double> cur(1.0, 0.0);
    for (auto& wi : w) {
        cur *= seed;
        wi = radius * cur;
    }

    auto eval = [&c](const std::complex<double>& z) {
        std::complex<double> acc(0.0, 0.0);
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
        return acc;
    };

    for (int iter = 0; iter < kRootMaxIterations; ++iter) {
        double worst = 0.0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            std::complex<double> denom(1.0, 0.0);
            for (std::size_t j = 0; j < w.size(); ++j)
                if (j != i) denom *= (w[i] - w[j]);
            const std::complex<double> delta = eval(w[i]) / denom;
            w[i] -= delta;
            worst = std::max(worst, std::abs(delta) / std::max(1.0, std::abs(w[i])));
        }
        if (worst < kRootTolerance) break;
    }
    return w;
}

}  // namespace detail

inline std::vector<RootWithMultiplicity> roots_with_multiplicity(const IntPoly& p) {
    if (p.is_zero()) throw Error("roots of the zero polynomial");
    std::vector<RootWithMultiplicity> out;
    const auto factors = squarefree_decomposition(to_rat(p));
    for (std::size_t m = 0; m < factors.size(); ++m)
        for (const auto& r : detail::durand_kerner(factors[m]))
            out.push_back({r, m + 1});
    return out;
}

/// All roots, repeated according to multiplicity.
inline std::vector<std::complex<double>> poly_roots(const IntPoly& p) {
    std::vector<std::complex<double>> out;
    for (const auto& rm : roots_with_multiplicity(p))
        for (std::size_t i = 0; i < rm.multiplicity; ++i) out.push_back(rm.root);
    return out;
}

inline bool is_real_root(const std::complex<double>& z) {
    return std::abs(z.imag()) <= 1e-9 * std::max(1.0, std::abs(z));
}

}  // namespace synczeta
