#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "realroots/dyadic.hpp"
#include "realroots/extended.hpp"
#include "realroots/rational.hpp"
#include "oracles.hpp"

using namespace realroots;
using testsupport::randRational;

TEST_CASE("rational sign") {
    CHECK(sign(Rational(3, 7)) == 1);
    CHECK(sign(Rational(0)) == 0);
    CHECK(sign(Rational(-5, 2)) == -1);
}

TEST_CASE("rational canonical form") {
    Rational q(6, -4);
    CHECK(q.numerator() == -3);
    CHECK(q.denominator() == 2);
    CHECK(q.toString() == "-3/2");
    CHECK(Rational(14, 2).toString() == "7");
    CHECK(Rational(0, 5) == Rational(0));
}

TEST_CASE("rational string round trip") {
    CHECK(Rational::fromString("-3/2") == Rational(-3, 2));
    CHECK(Rational::fromString("7") == Rational(7));
    CHECK(Rational::fromString("-3/2").toString() == "-3/2");
    CHECK_THROWS_AS(Rational::fromString("x"), SyntaxError);
    CHECK_THROWS_AS(Rational::fromString("1/0"), DivisionByZero);
}

TEST_CASE("rational arithmetic is exact") {
    Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK_THROWS_AS(a / Rational(0), DivisionByZero);
}

TEST_CASE("rational ring axioms on random samples") {
    std::mt19937_64 rng(20240901);
    for (int round = 0; round < 200; ++round) {
        Rational a = randRational(rng), b = randRational(rng), c = randRational(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        Rational s = a * b + c;
        CHECK(gcd(abs(s.numerator()), s.denominator()) == 1);
        CHECK(s.denominator() > 0);
    }
}

TEST_CASE("dyadic midpoint") {
    CHECK(midpoint(Dyadic(0), Dyadic(1)) == Dyadic(Integer(1), -1));
    Dyadic a(Integer(-3), -1);   // -3/2
    Dyadic b(Integer(-11), -3);  // -11/8
    CHECK(midpoint(a, b).toRational() == Rational(-23, 16));
    CHECK(midpoint(a, b).toString() == "-23/16");
    CHECK(midpoint(Dyadic(1), Dyadic(1)) == Dyadic(1));
}

TEST_CASE("dyadic embeds into rationals as a ring homomorphism") {
    std::mt19937_64 rng(20240902);
    std::uniform_int_distribution<long> mant(-64, 64);
    std::uniform_int_distribution<long> expo(-6, 6);
    for (int round = 0; round < 200; ++round) {
        Dyadic a(Integer(mant(rng)), expo(rng));
        Dyadic b(Integer(mant(rng)), expo(rng));
        CHECK((a + b).toRational() == a.toRational() + b.toRational());
        CHECK((a - b).toRational() == a.toRational() - b.toRational());
        CHECK((a < b) == (a.toRational() < b.toRational()));
        CHECK(midpoint(a, b).toRational() ==
              (a.toRational() + b.toRational()) / Rational(2));
    }
}

TEST_CASE("dyadic canonical form") {
    Dyadic d(Integer(8), -2);  // 8/4 = 2 = 1 * 2^1
    CHECK(d.mantissa() == 1);
    CHECK(d.exponent() == 1);
    CHECK(Dyadic(Integer(0), 5).exponent() == 0);
    CHECK(Dyadic::powerOfTwo(-4).toRational() == Rational(1, 16));
}

TEST_CASE("extended point total order") {
    ExtendedPoint neg = ExtendedPoint::negInfinity();
    ExtendedPoint pos = ExtendedPoint::posInfinity();
    ExtendedPoint a(Rational(-100));
    ExtendedPoint b(Rational(3, 2));
    CHECK(neg < a);
    CHECK(a < b);
    CHECK(b < pos);
    CHECK(neg < pos);
    CHECK(ExtendedPoint(Rational(3, 2)) == b);
    CHECK(neg == ExtendedPoint::negInfinity());
    CHECK(neg.toString() == "-inf");
    CHECK(pos.toString() == "inf");
}
