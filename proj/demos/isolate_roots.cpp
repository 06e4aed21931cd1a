// Isolate the real roots of a univariate polynomial with exact dyadic
// intervals, then print each interval with its Sturm certificate.

#include <iostream>

#include "realroots/realroots.hpp"

using namespace realroots;

int main() {
    UniPoly f = parseUniPoly("x*(2*x-3)*(x^4-2)^2");
    std::cout << "f = " << f << "\n";
    std::cout << "distinct real roots: " << sturmCount(f) << "\n";
    std::cout << "with multiplicity:   " << sturmCount(f, true) << "\n\n";

    for (const auto& iv : realRootIsolation(f, Rational(1, 8))) {
        int certified = sturmCount(f, ExtendedPoint(iv.lo.toRational()),
                                   ExtendedPoint(iv.hi.toRational()));
        std::cout << "(" << iv.lo << ", " << iv.hi << "]"
                  << "  multiplicity " << iv.multiplicity
                  << "  roots inside: " << certified << "\n";
    }
    return 0;
}
