#pragma once

/**
 * @file companion.hpp
 * @brief Companion matrix realizing a monic integer polynomial as its
 *        characteristic polynomial.
 */

#include "synczeta/intmat.hpp"

namespace synczeta {

struct CompanionMatrix {
    IntMat matrix;
    IntPoly source;  // det(zI - matrix) == source
};

/// Companion of a monic p = z^d + b_1 z^{d-1} + ... + b_d: ones on the
/// subdiagonal, last column (-b_d, ..., -b_1)^T.
inline CompanionMatrix companion(const IntPoly& p) {
    if (p.degree() < 1) throw NotMonic("companion needs degree >= 1");
    if (p.leading() != 1) throw NotMonic("companion needs a monic polynomial");
    const std::size_t d = static_cast<std::size_t>(p.degree());
    IntMat m(d, d);
    for (std::size_t i = 1; i < d; ++i) m.at(i, i - 1) = 1;
    for (std::size_t i = 0; i < d; ++i) m.at(i, d - 1) = -p[i];
    return {std::move(m), p};
}

}  // namespace synczeta
