#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "realroots/parse.hpp"
#include "realroots/unipoly.hpp"
#include "oracles.hpp"

using namespace realroots;
using testsupport::randRational;

namespace {

UniPoly P(const std::string& src) { return parseUniPoly(src); }

UniPoly randPoly(std::mt19937_64& rng, int maxDeg) {
    std::uniform_int_distribution<int> deg(0, maxDeg);
    int d = deg(rng);
    std::vector<Rational> cs;
    cs.reserve(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) cs.push_back(randRational(rng, 6, 4));
    return UniPoly(std::move(cs));
}

} // namespace

TEST_CASE("derivative basics") {
    CHECK(P("x^2 - 1").derivative() == P("2*x"));
    CHECK(P("7").derivative().isZero());
}

TEST_CASE("derivative of the degree-10 running example") {
    UniPoly f = P("x*(2*x-3)*(x^4-2)^2");
    // frozen expansion: 2x^10 - 3x^9 - 8x^6 + 12x^5 + 8x^2 - 12x
    CHECK(f == P("2*x^10 - 3*x^9 - 8*x^6 + 12*x^5 + 8*x^2 - 12*x"));
    UniPoly d = f.derivative();
    CHECK(d.degree() == 9);
    CHECK(d.leadingCoeff() == Rational(20));
    CHECK(d == P("20*x^9 - 27*x^8 - 48*x^5 + 60*x^4 + 16*x - 12"));
}

TEST_CASE("divmod examples") {
    auto [q1, r1] = divmod(P("x^2-1"), P("x-1"));
    CHECK(q1 == P("x+1"));
    CHECK(r1.isZero());

    auto [q2, r2] = divmod(P("x^3"), P("x^2+1"));
    CHECK(q2 == P("x"));
    CHECK(r2 == P("-x"));

    auto [q3, r3] = divmod(P("5"), P("x"));
    CHECK(q3.isZero());
    CHECK(r3 == P("5"));

    CHECK_THROWS_AS(divmod(P("x"), UniPoly::zero()), DivisionByZeroPoly);
}

TEST_CASE("divmod identity on random pairs") {
    std::mt19937_64 rng(20240903);
    for (int round = 0; round < 100; ++round) {
        UniPoly f = randPoly(rng, 8);
        UniPoly g = randPoly(rng, 5);
        if (g.isZero()) continue;
        auto [q, r] = divmod(f, g);
        CHECK(f == q * g + r);
        CHECK(r.degree() < g.degree());
    }
}

TEST_CASE("gcd examples") {
    CHECK(gcd(P("x^2-1"), P("x-1")) == P("x-1"));
    UniPoly f = P("x*(2*x-3)*(x^4-2)^2");
    CHECK(gcd(f, f.derivative()) == P("x^4-2"));
    CHECK(gcd(P("x^2+1"), P("x^2+1")) == P("x^2+1"));
    CHECK_THROWS_AS(gcd(UniPoly::zero(), UniPoly::zero()), BothZero);
}

TEST_CASE("gcd divides and pairs with the squarefree part") {
    std::mt19937_64 rng(20240904);
    for (int round = 0; round < 60; ++round) {
        UniPoly f = randPoly(rng, 6);
        UniPoly g = randPoly(rng, 6);
        if (f.isZero() || g.isZero()) continue;
        UniPoly d = gcd(f, g);
        CHECK(divmod(f, d).second.isZero());
        CHECK(divmod(g, d).second.isZero());

        // gcd(f, f') * squarefreePart(f) = f up to a nonzero rational scalar
        UniPoly product = gcd(f, f.derivative()) * f.squarefreePart();
        CHECK(product.degree() == f.degree());
        UniPoly scaled = (f.leadingCoeff() / product.leadingCoeff()) * product;
        CHECK(scaled == f);
    }
}

TEST_CASE("squarefree part examples") {
    CHECK(P("(x-1)^2").squarefreePart() == P("x-1"));
    UniPoly f = P("x*(2*x-3)*(x^4-2)^2");
    UniPoly sf = f.squarefreePart();
    CHECK(sf.degree() == 6);
    CHECK(sf == P("x*(2*x-3)*(x^4-2)").monic());
    CHECK(P("x^2+1").squarefreePart() == P("x^2+1"));
    CHECK_THROWS_AS(UniPoly::zero().squarefreePart(), ZeroPolynomial);
}

TEST_CASE("evalSign with extended endpoints") {
    CHECK(P("x^2-1").evalSign(ExtendedPoint(Rational(0))) == -1);
    CHECK(P("x^3").evalSign(ExtendedPoint::posInfinity()) == 1);
    CHECK(P("x^3").evalSign(ExtendedPoint::negInfinity()) == -1);
    CHECK(P("2*x^4-1").evalSign(ExtendedPoint::negInfinity()) == 1);
    CHECK(UniPoly::zero().evalSign(ExtendedPoint::posInfinity()) == 0);
}

TEST_CASE("derivative is linear and Leibniz") {
    std::mt19937_64 rng(20240905);
    for (int round = 0; round < 60; ++round) {
        UniPoly f = randPoly(rng, 6);
        UniPoly g = randPoly(rng, 6);
        Rational a = randRational(rng);
        CHECK((f + g).derivative() == f.derivative() + g.derivative());
        CHECK((a * f).derivative() == a * f.derivative());
        CHECK((f * g).derivative() == f.derivative() * g + f * g.derivative());
    }
}

TEST_CASE("content and primitive part") {
    UniPoly f = P("4/3*x^2 - 2/9*x + 8");
    Rational c = f.content();
    CHECK(c == Rational(2, 9));
    UniPoly prim = f.primitivePart();
    CHECK(prim == P("6*x^2 - x + 36"));
    CHECK(c * prim == f);
    CHECK(prim.content() == Rational(1));
    // sign preserved: content is positive
    CHECK(P("-2*x").primitivePart() == P("-x"));

    std::mt19937_64 rng(20240924);
    for (int round = 0; round < 40; ++round) {
        UniPoly g = randPoly(rng, 6);
        if (g.isZero()) continue;
        UniPoly pg = g.primitivePart();
        for (const auto& coeff : pg.coeffs()) CHECK(coeff.denominator() == 1);
        CHECK(g.content() * pg == g);
    }
}

TEST_CASE("printing round-trips through the parser") {
    std::mt19937_64 rng(20240906);
    for (int round = 0; round < 60; ++round) {
        UniPoly f = randPoly(rng, 7);
        CHECK(parseUniPoly(f.toString()) == f);
    }
    CHECK(UniPoly::zero().toString() == "0");
    CHECK(P("2*x^3 - 1/2*x + 7").toString() == "2*x^3 - 1/2*x + 7");
}
