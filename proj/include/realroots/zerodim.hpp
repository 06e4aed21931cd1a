#pragma once

#include <string>

#include "realroots/matrix.hpp"
#include "realroots/quotient_ring.hpp"

namespace realroots {

/// Matrix of the multiplication operator m_f on R in the standard basis.
inline SquareMatrix regularRepresentation(const MultiPoly& f, const QuotientRing& R) {
    return R.matrixOf(f);
}

/// The trace form S_h(f,g) = trace(m_{fgh}) on the standard basis: its rank
/// counts the points of V(I) with h != 0, its signature the real points
/// weighted by the sign of h.
inline SymBilinearForm traceForm(const MultiPoly& h, const QuotientRing& R) {
    std::size_t d = R.dimension();
    SquareMatrix s(d);
    for (std::size_t i = 0; i < d; ++i) {
        MultiPoly bih = R.basisElement(i) * h;
        for (std::size_t j = i; j < d; ++j) {
            Rational t = R.traceOf(bih * R.basisElement(j));
            s.at(i, j) = t;
            s.at(j, i) = t;
        }
    }
    return SymBilinearForm(std::move(s));
}

/// Minimal polynomial of m_f: the univariate eliminant of I with respect to
/// f, generating the kernel of K[Z] -> R, Z -> f.
inline UniPoly univariateEliminant(const MultiPoly& f, const QuotientRing& R,
                                   const std::string& var = "Z") {
    return minPoly(regularRepresentation(f, R), var);
}

/// Number of points of V(I) over the algebraic closure (distinct).
inline int traceCount(const QuotientRing& R) {
    MultiPoly one = MultiPoly::constant(1, R.vars(), R.gb().order);
    return static_cast<int>(rank(traceForm(one, R)));
}

/// Number of real points of V(I) (distinct).
inline int realCount(const QuotientRing& R) {
    MultiPoly one = MultiPoly::constant(1, R.vars(), R.gb().order);
    return signature(traceForm(one, R));
}

} // namespace realroots
