#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "realroots/parse.hpp"
#include "realroots/sturm.hpp"
#include "oracles.hpp"

using namespace realroots;
using namespace testsupport;

namespace {

UniPoly P(const std::string& src) { return parseUniPoly(src); }

const ExtendedPoint kNegInf = ExtendedPoint::negInfinity();
const ExtendedPoint kPosInf = ExtendedPoint::posInfinity();
ExtendedPoint at(long n, long d = 1) { return ExtendedPoint(Rational(n, d)); }

/// Eq. (1): consecutive triples satisfy f_{i-1} = q_i f_i - f_{i+1}, i.e.
/// f_{i-1} + f_{i+1} is exactly divisible by f_i.
void checkDivisionIdentity(const PolySequence& seq) {
    for (std::size_t i = 1; i + 1 < seq.size(); ++i) {
        UniPoly sum = seq[i - 1] + seq[i + 1];
        CHECK(divmod(sum, seq[i]).second.isZero());
    }
}

} // namespace

TEST_CASE("variations of rational sequences") {
    CHECK(variations(std::vector<Rational>{1, 0, -1, 2}) == 2);
    CHECK(variations(std::vector<Rational>{1, 2, 3}) == 0);
    CHECK(variations(std::vector<Rational>{-1, 1, -1, 1}) == 3);
    CHECK(variations(std::vector<Rational>{}) == 0);
    CHECK(variations(std::vector<Rational>{0, 0}) == 0);
}

TEST_CASE("variations of polynomial sequences at a point") {
    CHECK(variationsAt({P("x"), P("1")}, at(-1)) == 1);
    CHECK(variationsAt({P("x^2-1"), P("2*x"), P("2")}, at(0)) == 1);
    CHECK(variationsAt({P("x^2-1"), P("2*x"), P("2")}, kPosInf) == 0);
}

TEST_CASE("descartes bound") {
    CHECK(descartesBound(P("x^2 - x - 1")) == 1);
    CHECK(descartesBound(P("x^2 + 1")) == 0);
    UniPoly f = P("x*(2*x-3)*(x^4-2)^2");
    int v = descartesBound(f);
    CHECK(v >= 3);
    CHECK((v - 3) % 2 == 0);
    CHECK(v == 3);  // frozen: signs of (-12, 8, 12, -8, -3, 2) flip three times
    CHECK_THROWS_AS(descartesBound(UniPoly::zero()), ZeroPolynomial);
}

TEST_CASE("budan-fourier bound") {
    CHECK(budanFourierBound(P("x^2-1"), at(0), at(2)) == 1);
    CHECK(budanFourierBound(P("x^2+1"), kNegInf, kPosInf) == 2);

    UniPoly f = P("x*(2*x-3)*(x^4-2)^2");
    int v = budanFourierBound(f, at(-2), at(1));
    CHECK(v >= 3);
    CHECK((v - 3) % 2 == 0);
    CHECK(v == 7);  // frozen from the derivative-tower signs at -2 and 1
    CHECK(budanFourierBound(f, at(0), kPosInf) == 3);

    CHECK_THROWS_AS(budanFourierBound(P("x"), at(1), at(0)), BadInterval);
    CHECK_THROWS_AS(budanFourierBound(UniPoly::zero(), at(0), at(1)), ZeroPolynomial);
}

TEST_CASE("sylvester sequence construction") {
    PolySequence s1 = sylvesterSequence(P("x^2-1"), P("1"));
    REQUIRE(s1.size() == 3);
    CHECK(s1[0] == P("x^2-1"));
    CHECK(s1[1] == P("2*x"));
    CHECK(s1[2] == P("1"));

    PolySequence s2 = sylvesterSequence(P("x^2-1"), P("x"));
    REQUIRE(s2.size() >= 2);
    CHECK(s2[1] == P("2*x^2"));
    CHECK(s2.back() == P("1"));

    PolySequence s3 = sylvesterSequence(P("(x-1)^2"), P("1"));
    REQUIRE(s3.size() == 2);
    CHECK(s3[1] == P("2*x-2"));
    CHECK(s3.back().eval(Rational(1)).isZero());  // shared root stays in the tail

    CHECK_THROWS_AS(sylvesterSequence(UniPoly::zero(), P("1")), ZeroPolynomial);
    CHECK_THROWS_AS(sylvesterSequence(P("5"), P("1")), DegenerateSequence);
    CHECK_THROWS_AS(sylvesterSequence(P("x"), UniPoly::zero()), DegenerateSequence);
}

TEST_CASE("reduced sylvester sequence") {
    PolySequence r1 = reducedSylvesterSequence(P("x^2-1"), P("1"));
    REQUIRE(r1.size() == 3);
    CHECK(r1[0] == P("x^2-1"));
    CHECK(r1[1] == P("2*x"));
    CHECK(r1[2] == P("1"));

    PolySequence r2 = reducedSylvesterSequence(P("(x-1)^2"), P("1"));
    REQUIRE(r2.size() == 2);
    CHECK(r2[0].monic() == P("x-1"));
    CHECK(r2.back() == P("1"));

    PolySequence r3 = reducedSylvesterSequence(P("x^3"), P("1"));
    CHECK(r3.front().monic() == P("x"));
    CHECK(r3.back() == P("1"));
}

TEST_CASE("division identity holds along computed sequences") {
    std::mt19937_64 rng(20240907);
    for (int round = 0; round < 40; ++round) {
        PlantedPoly planted = makePlanted(rng, 3, 2, 1);
        UniPoly g = planted.poly.isConstant() ? P("x+1") : planted.poly.derivative();
        if (planted.poly.isConstant() || g.isZero()) continue;
        PolySequence seq = sylvesterSequence(planted.poly, P("x^2-1"));
        checkDivisionIdentity(seq);
        PolySequence red = reducedSylvesterSequence(planted.poly, P("x^2-1"));
        checkDivisionIdentity(red);
        CHECK(red.back() == P("1"));
        for (std::size_t i = 0; i + 1 < red.size(); ++i)
            CHECK(gcd(red[i], red[i + 1]).isConstant());
    }
}

TEST_CASE("sylvester count on the running example") {
    UniPoly f = P("x*(2*x-3)*(x^4-2)^2");
    CHECK(sylvesterCount(f, P("x^2-1"), kNegInf, kPosInf) == 2);
    CHECK(sylvesterCount(P("x^2-2"), P("1"), at(0), at(2)) == 1);
    CHECK(sylvesterCount(P("x"), P("x"), at(0), at(1)) == 0);
    CHECK_THROWS_AS(sylvesterCount(P("x"), P("1"), at(1), at(0)), BadInterval);
}

TEST_CASE("sturm count examples") {
    UniPoly f = P("x*(2*x-3)*(x^4-2)^2");
    CHECK(sturmCount(f) == 4);
    CHECK(sturmCount(f, true) == 6);
    CHECK(sturmCount(P("(x^2-2)*(x^2-3)")) == 4);
    CHECK(sturmCount(P("x^2+1")) == 0);
    CHECK(sturmCount(P("9")) == 0);
    CHECK_THROWS_AS(sturmCount(UniPoly::zero()), ZeroPolynomial);
}

TEST_CASE("sturm endpoint conventions") {
    UniPoly f = P("x*(x-1)");
    // (a,b] includes b, excludes a
    CHECK(sturmCount(f, at(0), at(1)) == 1);
    CHECK(sturmCount(f, at(-1), at(0)) == 1);
    CHECK(sturmCount(f, at(0), at(2)) == 1);
    // [a,b) includes a, excludes b
    CHECK(sturmCount(f, at(0), at(1), false, true) == 1);
    CHECK(sturmCount(f, at(-1), at(0), false, true) == 0);
    CHECK(sturmCount(f, at(-1), at(2), false, true) == 2);
}

TEST_CASE("sturm and sylvester against planted-root oracles") {
    std::mt19937_64 rng(20240908);
    int done = 0;
    while (done < 60) {
        PlantedPoly planted = makePlanted(rng);
        const UniPoly& f = planted.poly;
        if (f.isConstant()) continue;
        ExtendedPoint a = randEndpoint(rng, planted, true);
        ExtendedPoint b = randEndpoint(rng, planted, false);
        if (!(a < b)) continue;
        ++done;

        CHECK(sturmCount(f, a, b) == distinctRootsIn(planted, a, b));
        CHECK(sturmCount(f, a, b, true) == multRootsIn(planted, a, b));
        CHECK(sturmCount(f, a, b, false, true) == distinctRootsIn(planted, a, b, true));
        CHECK(sturmCount(f, a, b, true, true) == multRootsIn(planted, a, b, true));

        UniPoly g = P("x^2-1");
        CHECK(sylvesterCount(f, g, a, b) == sylvesterOracle(planted, g, a, b));

        int bf = budanFourierBound(f, a, b);
        int actual = multRootsIn(planted, a, b);
        CHECK(bf >= actual);
        CHECK((bf - actual) % 2 == 0);

        int dv = descartesBound(f);
        int pos = positiveRootsWithMult(planted);
        CHECK(dv >= pos);
        CHECK((dv - pos) % 2 == 0);
    }
}
