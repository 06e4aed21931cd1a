#pragma once

#include <string>
#include <utility>
#include <vector>

#include "realroots/zerodim.hpp"

namespace realroots {

/// One coordinate of the rational parametrization: x_i = numerator/denominator
/// evaluated at the roots of the squarefree part of the characteristic polynomial.
struct RurCoordinate {
    std::string var;
    UniPoly numerator;
    UniPoly denominator;
};

/// Rational univariate representation (sepForm, chi, phi): sepForm is a
/// certified separating linear form, chi the characteristic polynomial of
/// m_sepForm (degree = dim R, multiplicities of points retained), and the
/// coordinate maps restrict to a bijection between the roots of the
/// squarefree part of chi and the points of V(I).
struct RurTriple {
    MultiPoly sepForm;
    UniPoly charPolynomial;
    std::vector<RurCoordinate> coords;
};

namespace detail {

/// Horner truncations H_j of a monic p = sum a_i T^i of degree m:
/// H_j(T) = sum_{i=0}^{m-1-j} a_{i+j+1} T^i, so p(T)/(T-z) = sum_j z^j H_j(T)
/// whenever p(z) = 0.
inline std::vector<UniPoly> hornerTruncations(const UniPoly& p) {
    int m = p.degree();
    std::vector<UniPoly> hs;
    hs.reserve(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
        std::vector<Rational> cs;
        cs.reserve(static_cast<std::size_t>(m - j));
        for (int i = 0; i + j + 1 <= m; ++i) cs.push_back(p.coeff(static_cast<std::size_t>(i + j + 1)));
        hs.emplace_back(std::move(cs), p.variableName());
    }
    return hs;
}

/// The candidate linear form x_1 + c x_2 + c^2 x_3 + ...
inline MultiPoly candidateForm(const QuotientRing& R, long c) {
    const auto& vars = R.vars();
    MultiPoly form = MultiPoly::variable(0, vars, R.gb().order);
    Rational weight(1);
    for (std::size_t i = 1; i < vars.size(); ++i) {
        weight *= Rational(c);
        form = form + weight * MultiPoly::variable(i, vars, R.gb().order);
    }
    return form;
}

} // namespace detail

/// Searches the candidate forms x_1 + c x_2 + c^2 x_3 + ... for
/// c = 0, 1, -1, 2, -2, ... and certifies each by the trace-form rank test:
/// the form separates iff deg(squarefreePart(charPoly(m_form))) equals
/// rank(S_1) = #V(I). Coordinate maps are assembled from the power traces
/// trace(m_{x_i f^j}) against the Horner truncations of the squarefree part;
/// the common denominator is the same combination for x_i = 1, which equals
/// chi-bar' on radical ideals and absorbs point multiplicities otherwise.
inline RurTriple rationalUnivariateRepresentation(const QuotientRing& R,
                                                  const std::string& var = "T",
                                                  long searchBound = -1) {
    std::size_t d = R.dimension();
    std::size_t n = R.vars().size();
    if (searchBound < 0)
        searchBound = static_cast<long>(d * (d > 0 ? d - 1 : 0) / 2 + 1);

    MultiPoly one = MultiPoly::constant(1, R.vars(), R.gb().order);
    int points = static_cast<int>(rank(traceForm(one, R)));

    for (long step = 0; step <= searchBound; ++step) {
        for (int sgn : {+1, -1}) {
            if (step == 0 && sgn < 0) continue;
            long c = sgn * step;
            MultiPoly form = detail::candidateForm(R, c);
            SquareMatrix F = R.matrixOf(form);
            UniPoly chi = charPoly(F, var);
            UniPoly chiBar = d == 0 ? UniPoly::constant(1, var) : chi.squarefreePart();
            if (chiBar.degree() != points) continue;  // not separating

            // power traces t_j = tr(F^j) and s_{i,j} = tr(X_i F^j)
            std::size_t m = static_cast<std::size_t>(chiBar.degree());
            std::vector<UniPoly> horner = detail::hornerTruncations(chiBar);
            UniPoly denom = UniPoly::zero(var);
            std::vector<UniPoly> numers(n, UniPoly::zero(var));
            SquareMatrix P = SquareMatrix::identity(d);
            for (std::size_t j = 0; j < m; ++j) {
                denom = denom + P.trace() * horner[j];
                for (std::size_t i = 0; i < n; ++i) {
                    Rational s = (R.variableMatrix(i) * P).trace();
                    numers[i] = numers[i] + s * horner[j];
                }
                P = P * F;
            }

            RurTriple rur{std::move(form), std::move(chi), {}};
            rur.coords.reserve(n);
            for (std::size_t i = 0; i < n; ++i)
                rur.coords.push_back({R.vars()[i], std::move(numers[i]), denom});
            return rur;
        }
    }
    throw SearchExhausted();
}

/// Numerator of F(phi(T)) with denominators cleared: each variable x_i is
/// replaced by coords[i].numerator and every term is rescaled by the common
/// denominator to total degree. Used to verify that generators vanish on the
/// parametrization (result must reduce to 0 modulo squarefreePart(chi)).
inline UniPoly composeWithRur(const MultiPoly& F, const RurTriple& rur) {
    const std::string& var = rur.charPolynomial.variableName();
    unsigned total = F.totalDegree();
    UniPoly denom = rur.coords.empty() ? UniPoly::constant(1, var)
                                       : rur.coords.front().denominator;
    UniPoly acc = UniPoly::zero(var);
    for (const auto& t : F.terms()) {
        UniPoly term = UniPoly::constant(t.coeff, var);
        unsigned deg = 0;
        for (std::size_t i = 0; i < F.nvars(); ++i) {
            unsigned e = t.monomial.exponent(i);
            if (!e) continue;
            term = term * rur.coords[i].numerator.pow(e);
            deg += e;
        }
        term = term * denom.pow(total - deg);
        acc = acc + term;
    }
    return acc;
}

} // namespace realroots
