// Count the complex and real solutions of a zero-dimensional system through
// the trace form, then parametrize the solutions by a rational univariate
// representation.

#include <iostream>

#include "realroots/realroots.hpp"

using namespace realroots;

int main() {
    std::vector<std::string> vars{"x", "y"};
    MonomialOrder order;
    auto f = expandMulti(*parsePoly("x^2*y^2 - 3*x^2 - 3*y^2 + 5", vars), vars, order);
    auto g = expandMulti(*parsePoly("-3*x^2*y + 4*x*y^2 + 2*x*y + 1", vars), vars, order);

    QuotientRing R = QuotientRing::standardBasis(buchberger({f, g}, order));
    std::cout << "quotient dimension: " << R.dimension() << "\n";
    std::cout << "complex solutions:  " << traceCount(R) << "\n";
    std::cout << "real solutions:     " << realCount(R) << "\n\n";

    RurTriple rur = rationalUnivariateRepresentation(R);
    std::cout << "separating form: " << rur.sepForm << "\n";
    std::cout << "char poly:       " << rur.charPolynomial << "\n";
    UniPoly chiBar = rur.charPolynomial.squarefreePart();
    std::cout << "real roots of the squarefree char poly: " << sturmCount(chiBar) << "\n";
    return 0;
}
