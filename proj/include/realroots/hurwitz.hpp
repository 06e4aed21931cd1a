#pragma once

#include <vector>

#include "realroots/matrix.hpp"
#include "realroots/unipoly.hpp"

namespace realroots {

using HurwitzMatrix = SquareMatrix;

/// The k x k Hurwitz matrix of a degree-k polynomial f = c_k x^k + ... + c_0:
/// entry(i,j) = c_{k-2j+i} with 1-based indices, zero outside 0..k.
inline HurwitzMatrix hurwitzMatrix(const UniPoly& f) {
    if (f.isZero()) throw ZeroPolynomial("hurwitzMatrix");
    if (f.isConstant()) throw ConstantPolynomial("hurwitzMatrix");
    int k = f.degree();
    SquareMatrix h(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j) {
            int idx = k - 2 * j + i;
            if (idx >= 0 && idx <= k)
                h.at(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) =
                    f.coeff(static_cast<std::size_t>(idx));
        }
    return h;
}

/// Hurwitz determinants Delta_1..Delta_k: leading principal minors of the
/// Hurwitz matrix, computed exactly.
inline std::vector<Rational> hurwitzDeterminants(const UniPoly& f) {
    HurwitzMatrix h = hurwitzMatrix(f);
    std::size_t k = h.size();
    std::vector<Rational> deltas;
    deltas.reserve(k);
    for (std::size_t m = 1; m <= k; ++m) {
        SquareMatrix sub(m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) sub.at(i, j) = h.at(i, j);
        deltas.push_back(sub.determinant());
    }
    return deltas;
}

/// Hurwitz's criterion: all complex roots lie in the open left half-plane iff
/// every Delta_i > 0 (after normalizing the leading coefficient positive; the
/// sign flip leaves the roots unchanged).
inline bool isHurwitzStable(const UniPoly& f) {
    if (f.isZero()) throw ZeroPolynomial("isHurwitzStable");
    if (f.isConstant()) throw ConstantPolynomial("isHurwitzStable");
    UniPoly g = f.leadingCoeff().sign() < 0 ? -f : f;
    for (const Rational& d : hurwitzDeterminants(g))
        if (d.sign() <= 0) return false;
    return true;
}

} // namespace realroots
