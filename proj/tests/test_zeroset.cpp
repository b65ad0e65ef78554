#include <doctest.h>

#include <wuritt/io.hpp>
#include <wuritt/zeroset.hpp>

#include "testutil.hpp"

using namespace wuritt;

namespace {

const Field F5 = Field::primeField(5);

Polynomial pp(const std::string& text, const Field& f, const VarOrderPtr& order) {
    return parseExpression(text, f, order);
}

}  // namespace

TEST_CASE("oracle construction enforces its preconditions") {
    auto xy = testutil::xyOrder();
    CHECK_THROWS_AS(ZeroOracle(Field::rationals(), xy), UsageError);
    // 7^9 = 40,353,607 points blow the 10^7 budget
    auto nine = makeVarOrder({"a", "b", "c", "d", "e", "f", "g", "h", "i"});
    CHECK_THROWS_AS(ZeroOracle(Field::primeField(7), nine), UsageError);
    CHECK_NOTHROW(ZeroOracle(Field::primeField(7), testutil::xyzOrder()));  // 343
}

TEST_CASE("vanishing sets by exhaustive enumeration") {
    auto xy = testutil::xyOrder();
    ZeroOracle oracle(F5, xy);

    SUBCASE("the running example, cross-checked by a hand enumeration") {
        std::vector<Polynomial> ps{pp("x^2 - 1", F5, xy), pp("x*y - 1", F5, xy)};
        std::vector<Point> byHand;
        for (std::uint64_t a = 0; a < 5; ++a)
            for (std::uint64_t b = 0; b < 5; ++b)
                if ((a * a + 4) % 5 == 0 && (a * b + 4) % 5 == 0) byHand.push_back({a, b});
        PointSet expected(byHand);
        CHECK(oracle.vanishingSet(ps) == expected);
        CHECK(expected == PointSet({{1, 1}, {4, 4}}));
    }
    SUBCASE("a unit has no zeros") {
        CHECK(oracle.vanishingSet({pp("1", F5, xy)}).size() == 0);
    }
    SUBCASE("empty system vanishes everywhere") {
        Field f3 = Field::primeField(3);
        auto xOnly = makeVarOrder({"x"});
        ZeroOracle small(f3, xOnly);
        CHECK(small.vanishingSet(std::vector<Polynomial>{}) == PointSet({{0}, {1}, {2}}));
    }
    SUBCASE("field mismatch is rejected") {
        CHECK_THROWS_AS(oracle.vanishingSet({pp("x", Field::primeField(7), xy)}), UsageError);
        CHECK_THROWS_AS(oracle.vanishingSet({pp("x", Field::rationals(), xy)}), UsageError);
    }
}

TEST_CASE("quasi-varieties") {
    auto xy = testutil::xyOrder();
    ZeroOracle oracle(F5, xy);
    TriangularSet cs = TriangularSet::make({pp("x^2 - 1", F5, xy), pp("x*y - 1", F5, xy)});
    SUBCASE("no zero of the set kills the initial product here") {
        CHECK(oracle.quasiVanishingSet(cs, pp("x", F5, xy)) == PointSet({{1, 1}, {4, 4}}));
    }
    SUBCASE("unit initial product removes nothing") {
        CHECK(oracle.quasiVanishingSet(cs, pp("1", F5, xy)) == oracle.vanishingSet(cs));
    }
    SUBCASE("zero initial product removes everything") {
        CHECK(oracle.quasiVanishingSet(cs, Polynomial::zero(F5, xy)).size() == 0);
    }
}

TEST_CASE("decomposition identities on the running example") {
    auto xy = testutil::xyOrder();
    ZeroOracle oracle(F5, xy);
    std::vector<Polynomial> ps{pp("x^2 - 1", F5, xy), pp("x*y - 1", F5, xy)};
    auto [cs, trace] = characteristicSet(ps);
    CHECK(checkEq1(oracle, ps, cs).holds);

    ZeroDecomposition zd = zeroDecompose(ps);
    CHECK(checkEq2(oracle, ps, zd).holds);

    SUBCASE("deleting the main component breaks the identity with a witness") {
        ZeroDecomposition broken;
        for (std::size_t i = 1; i < zd.components.size(); ++i)
            broken.components.push_back(zd.components[i]);
        CheckResult r = checkEq2(oracle, ps, broken);
        CHECK(!r.holds);
        REQUIRE(r.counterexample.has_value());
        CHECK(oracle.vanishingSet(ps).contains(*r.counterexample));
    }
    SUBCASE("contradictory system: both sides empty") {
        std::vector<Polynomial> unit{pp("1", F5, xy)};
        auto [ucs, utrace] = characteristicSet(unit);
        CHECK(checkEq1(oracle, unit, ucs).holds);
        CHECK(checkEq2(oracle, unit, zeroDecompose(unit)).holds);
    }
}

TEST_CASE("vanishing set algebra, randomized") {
    testutil::Rng rng(11);
    auto xy = testutil::xyOrder();
    ZeroOracle oracle(F5, xy);
    for (int i = 0; i < 40; ++i) {
        std::vector<Polynomial> ps{testutil::randomPoly(rng, F5, xy, 2, 3, 3),
                                   testutil::randomPoly(rng, F5, xy, 2, 3, 3)};
        std::vector<Polynomial> qs{testutil::randomPoly(rng, F5, xy, 2, 3, 3)};
        std::vector<Polynomial> both = ps;
        both.insert(both.end(), qs.begin(), qs.end());

        // growing the system can only shrink the zero set
        CHECK(oracle.vanishingSet(both).subsetOf(oracle.vanishingSet(ps)));
        // conjunction = intersection
        CHECK(oracle.vanishingSet(both) ==
              oracle.vanishingSet(ps).setIntersect(oracle.vanishingSet(qs)));
        // scaling members changes nothing
        std::vector<Polynomial> scaled;
        for (const auto& p : ps) scaled.push_back(p.scale(testutil::randomNonzeroCoeff(rng, F5)));
        CHECK(oracle.vanishingSet(scaled) == oracle.vanishingSet(ps));
        std::vector<Polynomial> normalized;
        for (const auto& p : ps) normalized.push_back(normalizePrimitive(p));
        CHECK(oracle.vanishingSet(normalized) == oracle.vanishingSet(ps));
    }
}

TEST_CASE("independent evaluator agrees on every membership decision") {
    testutil::Rng rng(12);
    auto xyz = testutil::xyzOrder();
    ZeroOracle oracle(F5, xyz);
    for (int i = 0; i < 30; ++i) {
        Polynomial p = testutil::randomPoly(rng, F5, xyz, 3, 4, 5);
        PointSet zeros = oracle.vanishingSet({p});
        Point z{0, 0, 0};
        for (std::uint64_t a = 0; a < 5; ++a)
            for (std::uint64_t b = 0; b < 5; ++b)
                for (std::uint64_t c = 0; c < 5; ++c) {
                    z = {a, b, c};
                    REQUIRE((evalResidueDirect(p, z) == 0) == zeros.contains(z));
                }
    }
}

TEST_CASE("point set operations keep canonical order") {
    PointSet a({{2, 0}, {0, 1}, {0, 1}});
    CHECK(a.size() == 2);
    CHECK(a.points()[0] == Point{0, 1});
    PointSet b({{0, 1}});
    CHECK(b.subsetOf(a));
    CHECK(!a.subsetOf(b));
    CHECK(a.setMinus(b) == PointSet({{2, 0}}));
    CHECK(a.setUnion(b) == a);
    CHECK(a.firstNotIn(b) == Point{2, 0});
}
