#include <doctest.h>

#include <wuritt/charset.hpp>
#include <wuritt/io.hpp>
#include <wuritt/zeroset.hpp>

#include "testutil.hpp"

using namespace wuritt;

namespace {

const Field QQ = Field::rationals();
const Field F5 = Field::primeField(5);

Polynomial pp(const std::string& text, const Field& f, const VarOrderPtr& order) {
    return parseExpression(text, f, order);
}

}  // namespace

TEST_CASE("characteristic set fixed in one pass") {
    auto xy = testutil::xyOrder();
    SUBCASE("reducible member leaves no remainder") {
        std::vector<Polynomial> ps{pp("x^2 - 1", QQ, xy), pp("y - x", QQ, xy),
                                   pp("y^2 - 1", QQ, xy)};
        auto [cs, trace] = characteristicSet(ps);
        REQUIRE(cs.size() == 2);
        CHECK(cs.members()[0] == pp("x^2 - 1", QQ, xy));
        CHECK(cs.members()[1] == pp("y - x", QQ, xy));
        CHECK(trace.iterations.size() == 1);
        CHECK(trace.iterations.back().nonzeroRemainderCount == 0);
        for (const auto& p : ps) CHECK(setRemainder(p, cs).isZero());
    }
    SUBCASE("both inputs already form the basic set") {
        std::vector<Polynomial> ps{pp("x*y - 1", QQ, xy), pp("x^2 - x", QQ, xy)};
        auto [cs, trace] = characteristicSet(ps);
        REQUIRE(cs.size() == 2);
        CHECK(cs.members()[0] == pp("x^2 - x", QQ, xy));
        CHECK(cs.members()[1] == pp("x*y - 1", QQ, xy));
        CHECK(trace.iterations.size() == 1);
    }
    SUBCASE("contradictory input") {
        auto [cs, trace] = characteristicSet({pp("3", QQ, xy)});
        REQUIRE(cs.size() == 1);
        CHECK(cs.containsNonzeroConstant());  // normalized to the constant 1
        CHECK(cs.members()[0].isConstant());
    }
}

TEST_CASE("characteristic set needs several passes and descends strictly") {
    auto xy = testutil::xyOrder();
    std::vector<Polynomial> ps{pp("x^2 - 1", QQ, xy), pp("y - x", QQ, xy),
                               pp("y^2 + x", QQ, xy)};
    auto [cs, trace] = characteristicSet(ps);
    CHECK(trace.iterations.size() == 3);
    for (std::size_t i = 1; i < trace.iterations.size(); ++i)
        CHECK(triCompare(trace.iterations[i].basicSet, trace.iterations[i - 1].basicSet) ==
              std::weak_ordering::less);
    CHECK(trace.iterations.back().nonzeroRemainderCount == 0);
    REQUIRE(cs.size() == 2);
    CHECK(cs.members()[0] == pp("x + 1", QQ, xy));
    CHECK(cs.members()[1] == pp("y + 1", QQ, xy));
    for (const auto& p : ps) CHECK(setRemainder(p, cs).isZero());
}

TEST_CASE("characteristic set rejects empty input and honors the ceiling") {
    auto xy = testutil::xyOrder();
    CHECK_THROWS_AS(characteristicSet({}), UsageError);
    CHECK_THROWS_AS(characteristicSet({Polynomial::zero(QQ, xy)}), UsageError);
    std::vector<Polynomial> ps{pp("x^2 - 1", QQ, xy), pp("y - x", QQ, xy),
                               pp("y^2 + x", QQ, xy)};
    CHECK_THROWS_AS(characteristicSet(ps, {1}), CeilingError);
}

TEST_CASE("initial product") {
    auto xy = testutil::xyOrder();
    CHECK(initialProd(TriangularSet::make({pp("x^2 - 1", QQ, xy), pp("x*y - 1", QQ, xy)})) ==
          pp("x", QQ, xy));
    CHECK(initialProd(TriangularSet::make({pp("5*x*y^2 + x^3*y", QQ, xy)})) ==
          pp("5*x", QQ, xy));
    CHECK(initialProd(TriangularSet::empty(QQ, xy)) == pp("1", QQ, xy));
}

TEST_CASE("characteristic set contract against the oracle") {
    auto xy = testutil::xyOrder();
    ZeroOracle oracle(F5, xy);
    std::vector<Polynomial> ps{pp("x^2 - 1", F5, xy), pp("y - x", F5, xy),
                               pp("y^2 - 1", F5, xy)};
    TriangularSet cs = TriangularSet::make({pp("x^2 - 1", F5, xy), pp("y - x", F5, xy)});
    CHECK(isCharacteristicSet(cs, ps, oracle));

    TriangularSet tooSmall = TriangularSet::make({pp("y - x", F5, xy)});
    CHECK(!isCharacteristicSet(tooSmall, ps, oracle));  // x^2 - 1 has nonzero remainder

    // containment-only direction: remainders hold trivially when PS is a
    // subset of CS, even though CS may cut a smaller variety
    std::vector<Polynomial> sub{pp("x^2 - 1", F5, xy)};
    for (const auto& p : sub) CHECK(setRemainder(p, cs).isZero());
}

TEST_CASE("well-ordering split") {
    auto xy = testutil::xyOrder();
    SUBCASE("branch per nonconstant member, initial adjoined first") {
        std::vector<Polynomial> ps{pp("x^2 - 1", QQ, xy), pp("x*y - 1", QQ, xy)};
        TriangularSet cs = TriangularSet::make(ps);
        WellOrderingSplit split = wellOrderingSplit(ps, cs);
        CHECK(split.initialProduct == pp("x", QQ, xy));
        REQUIRE(split.branches.size() == 2);
        // first branch adjoins initial(x^2 - 1) = 1, second initial(x*y - 1) = x
        CHECK(split.branches[0][0] == pp("1", QQ, xy));
        CHECK(split.branches[1][0] == pp("x", QQ, xy));
        for (const auto& branch : split.branches) {
            REQUIRE(branch.size() == 1 + cs.size() + ps.size());
            CHECK(branch[1] == cs.members()[0]);
            CHECK(branch[2] == cs.members()[1]);
            CHECK(branch[3] == ps[0]);
            CHECK(branch[4] == ps[1]);
        }
    }
    SUBCASE("constant set splits into nothing") {
        std::vector<Polynomial> ps{pp("3", QQ, xy)};
        TriangularSet cs = TriangularSet::make(ps);
        WellOrderingSplit split = wellOrderingSplit(ps, cs);
        CHECK(split.branches.empty());
        CHECK(split.initialProduct == pp("1", QQ, xy));
    }
}

TEST_CASE("zero decomposition of the running example") {
    auto xy = testutil::xyOrder();
    std::vector<Polynomial> ps{pp("x^2 - 1", F5, xy), pp("x*y - 1", F5, xy)};
    ZeroDecomposition zd = zeroDecompose(ps);
    REQUIRE(zd.components.size() == 2);
    CHECK(zd.components[0].set.size() == 2);
    CHECK(zd.components[0].adjoinedInitials.empty());
    CHECK(zd.components[1].set.containsNonzeroConstant());
    REQUIRE(zd.components[1].adjoinedInitials.size() == 1);
    CHECK(zd.components[1].adjoinedInitials[0] == pp("x", F5, xy));
    for (const auto& comp : zd.components)
        for (const auto& p : ps) CHECK(setRemainder(p, comp.set).isZero());

    ZeroOracle oracle(F5, xy);
    CHECK(checkEq2(oracle, ps, zd).holds);
    PointSet zero = oracle.vanishingSet(ps);
    CHECK(zero == PointSet({{1, 1}, {4, 4}}));
    CHECK(zero == oracle.quasiVanishingSet(zd.components[0].set,
                                           initialProd(zd.components[0].set)));
}

TEST_CASE("zero decomposition degenerate inputs") {
    auto xy = testutil::xyOrder();
    SUBCASE("contradictory system") {
        ZeroDecomposition zd = zeroDecompose({pp("3", F5, xy)});
        REQUIRE(zd.components.size() == 1);
        CHECK(zd.components[0].set.containsNonzeroConstant());
    }
    SUBCASE("all initials constant: single component when pruned") {
        std::vector<Polynomial> ps{pp("x^2 - 1", F5, xy), pp("y - x", F5, xy)};
        ZeroDecomposition pruned = zeroDecompose(ps);
        REQUIRE(pruned.components.size() == 1);

        DecomposeOptions opts;
        opts.pruneConstantBranches = false;
        ZeroDecomposition full = zeroDecompose(ps, opts);
        CHECK(full.components.size() == 3);  // both 1-initial branches collapse

        ZeroOracle oracle(F5, xy);
        PointSet a, b;
        for (const auto& c : pruned.components)
            a = a.setUnion(oracle.quasiVanishingSet(c.set, initialProd(c.set)));
        for (const auto& c : full.components)
            b = b.setUnion(oracle.quasiVanishingSet(c.set, initialProd(c.set)));
        CHECK(a == b);
    }
    SUBCASE("depth ceiling reports a bug") {
        DecomposeOptions opts;
        opts.maxDepth = 0;
        std::vector<Polynomial> ps{pp("x^2 - 1", F5, xy), pp("x*y - 1", F5, xy)};
        CHECK_THROWS_AS(zeroDecompose(ps, opts), CeilingError);
    }
}

TEST_CASE("pruning never changes the enumerated zero set, randomized") {
    testutil::Rng rng(31337);
    auto xy = testutil::xyOrder();
    ZeroOracle oracle(F5, xy);
    int done = 0;
    while (done < 25) {
        std::vector<Polynomial> ps;
        std::size_t k = 1 + done % 3;
        for (std::size_t t = 0; t < k; ++t)
            ps.push_back(testutil::randomNonzeroPoly(rng, F5, xy, 2, 3, 3));
        ZeroDecomposition pruned = zeroDecompose(ps);
        DecomposeOptions opts;
        opts.pruneConstantBranches = false;
        ZeroDecomposition full = zeroDecompose(ps, opts);
        PointSet a, b;
        for (const auto& c : pruned.components)
            a = a.setUnion(oracle.quasiVanishingSet(c.set, initialProd(c.set)));
        for (const auto& c : full.components)
            b = b.setUnion(oracle.quasiVanishingSet(c.set, initialProd(c.set)));
        REQUIRE(a == b);
        REQUIRE(a == oracle.vanishingSet(ps));
        ++done;
    }
}

TEST_CASE("geometry mode") {
    auto xy = testutil::xyOrder();
    SUBCASE("conclusion in the ideal, no nondegeneracy needed") {
        GeometricProof proof =
            proveGeometric({pp("x^2 - 1", QQ, xy), pp("y - x", QQ, xy)}, pp("y^2 - 1", QQ, xy));
        CHECK(proof.provedGenerically);
        CHECK(proof.nondegeneracyConditions.empty());
        CHECK(checkSetIdentity(pp("y^2 - 1", QQ, xy), proof.charset, proof.witness));
    }
    SUBCASE("proof under a nondegeneracy condition") {
        GeometricProof proof = proveGeometric({pp("x*y - 1", QQ, xy), pp("x^2 - 1", QQ, xy)},
                                              pp("x*y^2 - y", QQ, xy));
        CHECK(proof.provedGenerically);
        REQUIRE(proof.nondegeneracyConditions.size() == 1);
        CHECK(proof.nondegeneracyConditions[0] == pp("x", QQ, xy));

        // F_5 cross-check: the conclusion vanishes on the whole variety
        ZeroOracle oracle(F5, xy);
        std::vector<Polynomial> hyps5{pp("x*y - 1", F5, xy), pp("x^2 - 1", F5, xy)};
        Polynomial concl5 = pp("x*y^2 - y", F5, xy);
        PointSet variety = oracle.vanishingSet(hyps5);
        for (const auto& z : variety.points()) {
            std::map<std::size_t, Coeff> at{{0, Coeff::residue(F5, z[0])},
                                            {1, Coeff::residue(F5, z[1])}};
            CHECK(concl5.evaluate(at).isZero());
        }
    }
    SUBCASE("nonmember conclusion is rejected") {
        GeometricProof proof =
            proveGeometric({pp("x^2 - 1", QQ, xy), pp("y - x", QQ, xy)}, pp("1", QQ, xy));
        CHECK(!proof.provedGenerically);
        CHECK(proof.witness.remainder == pp("1", QQ, xy));
    }
    SUBCASE("contradictory hypotheses prove anything") {
        GeometricProof proof = proveGeometric({pp("3", QQ, xy)}, pp("1", QQ, xy));
        CHECK(proof.provedGenerically);
    }
}

TEST_CASE("remainder condition holds on randomized systems") {
    testutil::Rng rng(90210);
    auto xyz = testutil::xyzOrder();
    int done = 0;
    while (done < 30) {
        std::vector<Polynomial> ps;
        std::size_t k = 1 + done % 3;
        for (std::size_t t = 0; t < k; ++t)
            ps.push_back(testutil::randomNonzeroPoly(rng, F5, xyz, 2, 3, 3));
        auto [cs, trace] = characteristicSet(ps);
        for (const auto& p : ps) REQUIRE(setRemainder(p, cs).isZero());
        for (std::size_t i = 1; i < trace.iterations.size(); ++i)
            REQUIRE(triCompare(trace.iterations[i].basicSet, trace.iterations[i - 1].basicSet) ==
                    std::weak_ordering::less);
        ++done;
    }
}

TEST_CASE("decomposition is deterministic") {
    auto xy = testutil::xyOrder();
    std::vector<Polynomial> ps{pp("x^2 - 1", F5, xy), pp("x*y - 1", F5, xy)};
    ZeroDecomposition a = zeroDecompose(ps);
    ZeroDecomposition b = zeroDecompose(ps);
    REQUIRE(a.components.size() == b.components.size());
    for (std::size_t i = 0; i < a.components.size(); ++i) {
        CHECK(a.components[i].set == b.components[i].set);
        CHECK(a.components[i].adjoinedInitials.size() == b.components[i].adjoinedInitials.size());
    }
}
