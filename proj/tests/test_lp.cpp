#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <vector>

#include "geomjoin/errors.hpp"
#include "geomjoin/lp.hpp"

using namespace geomjoin;

namespace {

// Tiny deterministic generator for property tests.
struct Rng {
    std::uint64_t s;
    std::uint64_t next() {
        s += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    int intIn(int lo, int hi) { return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }
};

}  // namespace

TEST_CASE("unit box is feasible with witness at the origin") {
    LinearSystem sys;
    int x = sys.addVariable(VarKind::Free, "x");
    sys.addConstraint({{x, Rat(1)}}, Rel::Ge, Rat(0));
    sys.addConstraint({{x, Rat(1)}}, Rel::Le, Rat(1));
    LPOutcome out = sys.solveFeasibility();
    REQUIRE(out.feasible);
    CHECK(out.witness[0] == Rat(0));
    CHECK(sys.checkWitness(out.witness));
}

TEST_CASE("empty box yields a verifying Farkas certificate") {
    LinearSystem sys;
    int x = sys.addVariable(VarKind::Free, "x");
    sys.addConstraint({{x, Rat(1)}}, Rel::Ge, Rat(1));
    sys.addConstraint({{x, Rat(1)}}, Rel::Le, Rat(0));
    LPOutcome out = sys.solveFeasibility();
    REQUIRE_FALSE(out.feasible);
    REQUIRE(out.farkas.size() == 2);
    CHECK(out.farkas[0] > 0);   // >= row: nonnegative multiplier
    CHECK(out.farkas[1] < 0);   // <= row: nonpositive multiplier
    CHECK(sys.checkFarkas(out.farkas));
}

TEST_CASE("barycentric system for 0 in conv{(1,0),(-1,1),(-1,-1)}") {
    // Affinely independent vertices, so the witness is unique:
    // y-row forces l2 == l3, x-row forces l1 == l2 + l3, sum gives 1/2,1/4,1/4.
    LinearSystem sys;
    int l = sys.addVariables(3, VarKind::NonNeg);
    sys.addConstraint({{l, Rat(1)}, {l + 1, Rat(-1)}, {l + 2, Rat(-1)}}, Rel::Eq, Rat(0));
    sys.addConstraint({{l + 1, Rat(1)}, {l + 2, Rat(-1)}}, Rel::Eq, Rat(0));
    sys.addConstraint({{l, Rat(1)}, {l + 1, Rat(1)}, {l + 2, Rat(1)}}, Rel::Eq, Rat(1));
    LPOutcome out = sys.solveFeasibility();
    REQUIRE(out.feasible);
    CHECK(out.witness[0] == Rat(1, 2));
    CHECK(out.witness[1] == Rat(1, 4));
    CHECK(out.witness[2] == Rat(1, 4));
}

TEST_CASE("unknown variable in a constraint is an input error") {
    LinearSystem sys;
    sys.addVariable(VarKind::Free);
    CHECK_THROWS_AS(sys.addConstraint({{5, Rat(1)}}, Rel::Eq, Rat(0)), InputError);
}

TEST_CASE("free variables and equalities mix") {
    LinearSystem sys;
    int x = sys.addVariable(VarKind::Free);
    int y = sys.addVariable(VarKind::Free);
    sys.addConstraint({{x, Rat(1)}, {y, Rat(1)}}, Rel::Eq, Rat(2));
    sys.addConstraint({{x, Rat(1)}, {y, Rat(-1)}}, Rel::Eq, Rat(4));
    LPOutcome out = sys.solveFeasibility();
    REQUIRE(out.feasible);
    CHECK(out.witness[0] == Rat(3));
    CHECK(out.witness[1] == Rat(-1));
}

TEST_CASE("optimizeVariable finds exact segment parameter bounds") {
    // t in [0,1] with 3t >= 1 and 6t <= 5: t range [1/3, 5/6].
    LinearSystem sys;
    int t = sys.addVariable(VarKind::NonNeg, "t");
    sys.addConstraint({{t, Rat(1)}}, Rel::Le, Rat(1));
    sys.addConstraint({{t, Rat(3)}}, Rel::Ge, Rat(1));
    sys.addConstraint({{t, Rat(6)}}, Rel::Le, Rat(5));
    OptResult lo = sys.optimizeVariable(t, false);
    OptResult hi = sys.optimizeVariable(t, true);
    REQUIRE(lo.feasible);
    REQUIRE(hi.feasible);
    CHECK(lo.value == Rat(1, 3));
    CHECK(hi.value == Rat(5, 6));
}

TEST_CASE("optimize over empty region reports infeasible") {
    LinearSystem sys;
    int t = sys.addVariable(VarKind::NonNeg);
    sys.addConstraint({{t, Rat(1)}}, Rel::Ge, Rat(2));
    sys.addConstraint({{t, Rat(1)}}, Rel::Le, Rat(1));
    CHECK_FALSE(sys.optimizeVariable(t, false).feasible);
}

TEST_CASE("rational coefficients are scaled exactly") {
    LinearSystem sys;
    int x = sys.addVariable(VarKind::Free);
    sys.addConstraint({{x, Rat(1, 3)}}, Rel::Eq, Rat(5, 7));
    LPOutcome out = sys.solveFeasibility();
    REQUIRE(out.feasible);
    CHECK(out.witness[0] == Rat(15, 7));
}

TEST_CASE("every answer carries an exactly checkable certificate") {
    // Randomized small systems; re-substitution must pass for all of them.
    Rng rng{20240617ull};
    int feasCount = 0, infeasCount = 0;
    for (int iter = 0; iter < 300; ++iter) {
        LinearSystem sys;
        const int nv = rng.intIn(1, 4);
        for (int v = 0; v < nv; ++v)
            sys.addVariable(rng.intIn(0, 1) ? VarKind::Free : VarKind::NonNeg);
        const int nc = rng.intIn(1, 6);
        for (int c = 0; c < nc; ++c) {
            std::vector<std::pair<int, Rat>> terms;
            for (int v = 0; v < nv; ++v) {
                int coef = rng.intIn(-3, 3);
                if (coef != 0) terms.emplace_back(v, Rat(coef));
            }
            Rel rel = static_cast<Rel>(rng.intIn(0, 2));
            sys.addConstraint(terms, rel, Rat(rng.intIn(-5, 5)));
        }
        LPOutcome out = sys.solveFeasibility();
        if (out.feasible) {
            ++feasCount;
            CHECK(sys.checkWitness(out.witness));
        } else {
            ++infeasCount;
            CHECK(sys.checkFarkas(out.farkas));
        }
    }
    // The mix should be non-trivial in both directions.
    CHECK(feasCount > 20);
    CHECK(infeasCount > 20);
}

TEST_CASE("determinism: identical systems give identical answers") {
    auto build = [] {
        LinearSystem sys;
        int x = sys.addVariable(VarKind::Free);
        int y = sys.addVariable(VarKind::NonNeg);
        sys.addConstraint({{x, Rat(2)}, {y, Rat(3)}}, Rel::Le, Rat(12));
        sys.addConstraint({{x, Rat(1)}, {y, Rat(-1)}}, Rel::Ge, Rat(-2));
        sys.addConstraint({{x, Rat(1)}}, Rel::Ge, Rat(-1));
        return sys;
    };
    LPOutcome a = build().solveFeasibility();
    LPOutcome b = build().solveFeasibility();
    REQUIRE(a.feasible == b.feasible);
    CHECK(a.witness == b.witness);
}

TEST_CASE("large coefficients take the arbitrary-precision path") {
    LinearSystem sys;
    int x = sys.addVariable(VarKind::Free);
    Rat big = Rat(BigInt("123456789012345678901234567890"), BigInt(7));
    sys.addConstraint({{x, Rat(3)}}, Rel::Eq, big);
    LPOutcome out = sys.solveFeasibility();
    REQUIRE(out.feasible);
    CHECK(out.witness[0] * 3 == big);
}
