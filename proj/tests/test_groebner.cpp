#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "realroots/groebner.hpp"
#include "realroots/parse.hpp"
#include "realroots/quotient_ring.hpp"
#include "oracles.hpp"

using namespace realroots;
using namespace testsupport;

namespace {

const std::vector<std::string> kX{"x"};
const std::vector<std::string> kXY{"x", "y"};

MultiPoly M(const std::string& src, const std::vector<std::string>& vars = kXY,
            MonomialOrder order = MonomialOrder()) {
    return expandMulti(*parsePoly(src, vars), vars, order);
}

void checkGroebnerPostconditions(const GroebnerBasis& gb, const std::vector<MultiPoly>& gens) {
    for (const auto& g : gb.generators) CHECK(g.leadingCoeff() == Rational(1));
    // every S-polynomial reduces to zero
    for (std::size_t i = 0; i < gb.generators.size(); ++i)
        for (std::size_t j = i + 1; j < gb.generators.size(); ++j)
            CHECK(normalForm(sPolynomial(gb.generators[i], gb.generators[j]), gb).isZero());
    // ideal membership preserved
    for (const auto& f : gens) CHECK(normalForm(f, gb).isZero());
    // interreduced
    for (std::size_t i = 0; i < gb.generators.size(); ++i) {
        GroebnerBasis others{{}, gb.order, gb.vars};
        for (std::size_t j = 0; j < gb.generators.size(); ++j)
            if (j != i) others.generators.push_back(gb.generators[j]);
        CHECK(normalForm(gb.generators[i], others) == gb.generators[i]);
    }
}

} // namespace

TEST_CASE("buchberger on a principal ideal") {
    auto gb = buchberger({M("x", kX)}, MonomialOrder());
    REQUIRE(gb.generators.size() == 1);
    CHECK(gb.generators[0] == M("x", kX));
}

TEST_CASE("buchberger on the circle and a line") {
    std::vector<MultiPoly> gens{M("x^2 + y^2 - 1"), M("x - y")};
    auto gb = buchberger(gens, MonomialOrder());
    REQUIRE(gb.generators.size() == 2);
    CHECK(gb.generators[0] == M("x - y"));
    CHECK(gb.generators[1] == M("y^2 - 1/2"));
    checkGroebnerPostconditions(gb, gens);
}

TEST_CASE("buchberger on the two quartic curves has an 8-dimensional quotient") {
    std::vector<MultiPoly> gens{M("x^2*y^2 - 3*x^2 - 3*y^2 + 5"),
                                M("-3*x^2*y + 4*x*y^2 + 2*x*y + 1")};
    auto gb = buchberger(gens, MonomialOrder());
    checkGroebnerPostconditions(gb, gens);
    QuotientRing R = QuotientRing::standardBasis(gb);
    CHECK(R.dimension() == 8);
}

TEST_CASE("buchberger reproduces the known katsura-3 basis") {
    const std::vector<std::string> kXYZ{"x", "y", "z"};
    std::vector<MultiPoly> gens{M("x + 2*y + 2*z - 1", kXYZ),
                                M("x^2 + 2*y^2 + 2*z^2 - x", kXYZ),
                                M("2*x*y + 2*y*z - y", kXYZ)};
    auto gb = buchberger(gens, MonomialOrder());
    REQUIRE(gb.generators.size() == 4);
    // frozen reduced grevlex basis, cross-checked against an external CAS
    CHECK(gb.generators[0] == M("x + 2*y + 2*z - 1", kXYZ));
    CHECK(gb.generators[1] == M("y*z + 6/5*z^2 - 1/10*y - 2/5*z", kXYZ));
    CHECK(gb.generators[2] == M("y^2 - 3/5*z^2 - 1/5*y + 1/5*z", kXYZ));
    CHECK(gb.generators[3] == M("z^3 - 79/210*z^2 + 1/30*y + 1/70*z", kXYZ));
    checkGroebnerPostconditions(gb, gens);
}

TEST_CASE("lex order eliminates variables") {
    // circle and hyperbola: the lex basis triangulates, frozen against an
    // external CAS: {y^4 - y^2 + 1, x + y^3 - y}
    MonomialOrder lex(OrderKind::Lex);
    std::vector<MultiPoly> gens{M("x^2 + y^2 - 1", kXY, lex), M("x*y - 1", kXY, lex)};
    auto gb = buchberger(gens, lex);
    REQUIRE(gb.generators.size() == 2);
    CHECK(gb.generators[0] == M("y^4 - y^2 + 1", kXY, lex));
    CHECK(gb.generators[1] == M("x + y^3 - y", kXY, lex));
    checkGroebnerPostconditions(gb, gens);
}

TEST_CASE("buchberger rejects all-zero input") {
    CHECK_THROWS_AS(buchberger({MultiPoly::zero(kXY)}, MonomialOrder()), AllZeroGenerators);
    CHECK_THROWS_AS(buchberger({}, MonomialOrder()), AllZeroGenerators);
}

TEST_CASE("normal form properties") {
    auto gb = buchberger({M("x^2 + y^2 - 1"), M("x - y")}, MonomialOrder());
    CHECK(normalForm(M("x^2"), gb) == M("1/2"));
    CHECK(normalForm(gb.generators[0], gb).isZero());
    CHECK(normalForm(M("1"), gb) == M("1"));

    std::mt19937_64 rng(20240913);
    for (int round = 0; round < 40; ++round) {
        MultiPoly f = MultiPoly::zero(kXY), g = MultiPoly::zero(kXY);
        std::uniform_int_distribution<unsigned> e(0, 3);
        for (int t = 0; t < 4; ++t) {
            f = f + MultiPoly::fromTerms(
                        {{Monomial(std::vector<unsigned>{e(rng), e(rng)}), randRational(rng)}},
                        kXY, f.order());
            g = g + MultiPoly::fromTerms(
                        {{Monomial(std::vector<unsigned>{e(rng), e(rng)}), randRational(rng)}},
                        kXY, g.order());
        }
        Rational a = randRational(rng), b = randRational(rng);
        // K-linear and idempotent
        CHECK(normalForm(a * f + b * g, gb) ==
              a * normalForm(f, gb) + b * normalForm(g, gb));
        CHECK(normalForm(normalForm(f, gb), gb) == normalForm(f, gb));
        // remainder has no reducible term
        MultiPoly nf = normalForm(f, gb);
        for (const auto& t : nf.terms())
            for (const auto& gen : gb.generators)
                CHECK(!gen.leadingMonomial().divides(t.monomial));
    }
}

TEST_CASE("standard basis of univariate and bivariate quotients") {
    auto gbUni = buchberger({M("x^2 - 2", kX)}, MonomialOrder());
    QuotientRing rUni = QuotientRing::standardBasis(gbUni);
    REQUIRE(rUni.dimension() == 2);
    CHECK(rUni.basis()[0] == Monomial(std::vector<unsigned>{0}));
    CHECK(rUni.basis()[1] == Monomial(std::vector<unsigned>{1}));

    auto gb = buchberger({M("x^2 + y^2 - 1"), M("x - y")}, MonomialOrder());
    QuotientRing r = QuotientRing::standardBasis(gb);
    REQUIRE(r.dimension() == 2);
    CHECK(r.basis()[0] == Monomial(std::vector<unsigned>{0, 0}));
    CHECK(r.basis()[1] == Monomial(std::vector<unsigned>{0, 1}));
}

TEST_CASE("standard basis rejects positive-dimensional ideals") {
    auto gb = buchberger({M("x*y - 1")}, MonomialOrder());
    CHECK_THROWS_AS(QuotientRing::standardBasis(gb), NotZeroDimensional);
}

TEST_CASE("standard basis is downward closed") {
    std::mt19937_64 rng(20240914);
    for (int round = 0; round < 10; ++round) {
        PlantedSystem sys = makePlantedSystem(rng, 2, 3, 1);
        auto gb = buchberger(sys.gens, MonomialOrder());
        QuotientRing R = QuotientRing::standardBasis(gb);
        CHECK(R.dimension() == 5);  // 3 real points + one conjugate pair
        for (const auto& m : R.basis()) {
            for (std::size_t i = 0; i < m.nvars(); ++i) {
                if (m.exponent(i) == 0) continue;
                std::vector<unsigned> lower = m.exponents();
                --lower[i];
                Monomial below{std::move(lower)};
                bool present = false;
                for (const auto& b : R.basis())
                    if (b == below) present = true;
                CHECK(present);
            }
        }
    }
}

TEST_CASE("groebner bases on planted systems pass self checks") {
    std::mt19937_64 rng(20240915);
    for (int round = 0; round < 8; ++round) {
        PlantedSystem sys = makePlantedSystem(rng, 3, 2, 1);
        auto gb = buchberger(sys.gens, MonomialOrder());
        checkGroebnerPostconditions(gb, sys.gens);
        QuotientRing R = QuotientRing::standardBasis(gb);
        CHECK(R.dimension() == 4);
    }
}
