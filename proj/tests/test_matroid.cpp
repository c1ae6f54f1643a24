#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdint>
#include <set>

#include "geomjoin/errors.hpp"
#include "geomjoin/matroid.hpp"

using namespace geomjoin;

namespace {

QPoint pt(std::initializer_list<int> cs) {
    QPoint p;
    for (int c : cs) p.coords.emplace_back(c);
    return p;
}

GroundSet lineGround(int n) {
    GroundSet g;
    g.dimension = 1;
    for (int i = 0; i < n; ++i) {
        g.labels.push_back(i);
        g.points.push_back(pt({i}));
    }
    return g;
}

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

TEST_CASE("rank: partition counts distinct classes met") {
    Instance inst(lineGround(4), PartitionSpec{{{0, 1}, {2, 3}}});
    CHECK(inst.rankOf(std::vector<int>{}) == 0);
    CHECK(inst.rankOf(std::vector<int>{0, 1}) == 1);  // same class twice
    CHECK(inst.rankOf(std::vector<int>{0, 2}) == 2);
    CHECK(inst.rank() == 2);
}

TEST_CASE("rank: uniform clamps at r") {
    Instance inst(lineGround(5), UniformSpec{3});
    CHECK(inst.rankOf(std::vector<int>{0, 1, 2, 3}) == 3);
    CHECK(inst.rankOf(std::vector<int>{0}) == 1);
}

TEST_CASE("rank: unknown label is an input error") {
    Instance inst(lineGround(3), UniformSpec{2});
    CHECK_THROWS_AS(inst.rankOf(std::vector<int>{7}), InputError);
}

TEST_CASE("augment: empty set extends from any singleton") {
    Instance inst(lineGround(3), UniformSpec{2});
    CHECK(inst.augment(std::vector<int>{}, std::vector<int>{1}) == 1);
}

TEST_CASE("augment: partition picks the color-preserving element") {
    // A = {0} in class X1, B = {1 in X1, 2 in X2}: only 2 keeps colorfulness.
    Instance inst(lineGround(4), PartitionSpec{{{0, 1}, {2, 3}}});
    CHECK(inst.augment(std::vector<int>{0}, std::vector<int>{1, 2}) == 2);
}

TEST_CASE("augment: uniform ties break to the smallest label") {
    Instance inst(lineGround(4), UniformSpec{2});
    CHECK(inst.augment(std::vector<int>{1}, std::vector<int>{2, 3}) == 2);
}

TEST_CASE("augment: precondition violations are input errors") {
    Instance inst(lineGround(4), PartitionSpec{{{0, 1}, {2, 3}}});
    CHECK_THROWS_AS(inst.augment(std::vector<int>{0, 1}, std::vector<int>{2, 3}), InputError);
    CHECK_THROWS_AS(inst.augment(std::vector<int>{0}, std::vector<int>{2}), InputError);
}

TEST_CASE("enumerateIndependent: maxSize 0 gives only the empty set") {
    Instance inst(lineGround(3), UniformSpec{2});
    auto sets = inst.independentSets(0);
    REQUIRE(sets.size() == 1);
    CHECK(sets[0].empty());
}

TEST_CASE("enumerateIndependent: partition example lists exactly the colorful sets") {
    GroundSet g;
    g.dimension = 1;
    for (int l : {1, 2, 3}) {
        g.labels.push_back(l);
        g.points.push_back(pt({l}));
    }
    Instance inst(g, PartitionSpec{{{1, 2}, {3}}});
    auto sets = inst.independentSets(2);
    const std::set<std::vector<int>> got(sets.begin(), sets.end());
    const std::set<std::vector<int>> want = {{}, {1}, {2}, {3}, {1, 3}, {2, 3}};
    CHECK(got == want);
    // Lexicographic sequence order, empty set first.
    const std::vector<std::vector<int>> ordered = {{}, {1}, {1, 3}, {2}, {2, 3}, {3}};
    CHECK(sets == ordered);
}

TEST_CASE("enumerateIndependent: uniform U(2,3)") {
    Instance inst(lineGround(3), UniformSpec{2});
    auto sets = inst.independentSets(2);
    CHECK(sets.size() == 1 + 3 + 3);
}

TEST_CASE("enumerateBases: partition is the product of classes") {
    GroundSet g = lineGround(4);
    Instance inst(g, PartitionSpec{{{0, 1}, {2, 3}}});
    const auto& bases = inst.bases();
    const std::vector<std::vector<int>> want = {{0, 2}, {0, 3}, {1, 2}, {1, 3}};
    CHECK(bases == want);
}

TEST_CASE("enumerateBases: uniform U(2,3)") {
    Instance inst(lineGround(3), UniformSpec{2});
    const std::vector<std::vector<int>> want = {{0, 1}, {0, 2}, {1, 2}};
    CHECK(inst.bases() == want);
}

TEST_CASE("enumerateBases: explicit list is echoed after validation") {
    Instance inst(lineGround(3), ExplicitBasesSpec{{{1, 2}, {0, 1}, {0, 2}}});
    const std::vector<std::vector<int>> want = {{0, 1}, {0, 2}, {1, 2}};
    CHECK(inst.bases() == want);
}

TEST_CASE("explicit bases: exchange axiom is enforced at load") {
    // {0,1} and {2,3} violate exchange: dropping 0 admits neither 2 nor 3.
    CHECK_THROWS_AS(Instance(lineGround(4), ExplicitBasesSpec{{{0, 1}, {2, 3}}}), InputError);
    // Unequal cardinalities are rejected outright.
    CHECK_THROWS_AS(Instance(lineGround(3), ExplicitBasesSpec{{{0, 1}, {2}}}), InputError);
    // A label in no basis is a loop.
    CHECK_THROWS_AS(Instance(lineGround(3), ExplicitBasesSpec{{{0, 1}}}), InputError);
}

TEST_CASE("partition spec must partition the labels") {
    CHECK_THROWS_AS(Instance(lineGround(3), PartitionSpec{{{0, 1}}}), InputError);
    CHECK_THROWS_AS(Instance(lineGround(3), PartitionSpec{{{0, 1}, {1, 2}}}), InputError);
    CHECK_THROWS_AS(Instance(lineGround(2), PartitionSpec{{{0, 1}, {}}}), InputError);
}

TEST_CASE("uniform rank bounds are enforced") {
    CHECK_THROWS_AS(Instance(lineGround(3), UniformSpec{0}), InputError);
    CHECK_THROWS_AS(Instance(lineGround(3), UniformSpec{4}), InputError);
}

TEST_CASE("rank is monotone and submodular on random small matroids") {
    Rng rng{314159ull};
    for (int iter = 0; iter < 60; ++iter) {
        const int n = rng.intIn(3, 8);
        GroundSet g = lineGround(n);
        Instance inst = [&] {
            switch (rng.intIn(0, 2)) {
                case 0: {
                    std::vector<std::vector<int>> classes;
                    for (int l = 0; l < n; ++l) {
                        if (classes.empty() || rng.intIn(0, 1) == 0)
                            classes.push_back({l});
                        else
                            classes.back().push_back(l);
                    }
                    return Instance(g, PartitionSpec{std::move(classes)});
                }
                case 1: return Instance(g, UniformSpec{rng.intIn(1, n)});
                default: {
                    // Uniform expressed through explicit bases: a guaranteed matroid.
                    const int r = rng.intIn(1, std::min(3, n));
                    std::vector<std::vector<int>> bases;
                    std::vector<int> idx(static_cast<std::size_t>(r));
                    std::function<void(int, int)> rec = [&](int from, int depth) {
                        if (depth == r) {
                            bases.emplace_back(idx.begin(), idx.end());
                            return;
                        }
                        for (int l = from; l < n; ++l) {
                            idx[static_cast<std::size_t>(depth)] = l;
                            rec(l + 1, depth + 1);
                        }
                    };
                    rec(0, 0);
                    return Instance(g, ExplicitBasesSpec{std::move(bases)});
                }
            }
        }();

        // Random subsets A subset B, plus pairs for submodularity.
        for (int rep = 0; rep < 20; ++rep) {
            std::vector<int> A, B;
            for (int l = 0; l < n; ++l) {
                const int roll = rng.intIn(0, 3);
                if (roll == 0) { A.push_back(l); B.push_back(l); }
                else if (roll == 1) { B.push_back(l); }
            }
            CHECK(inst.rankOf(A) <= inst.rankOf(B));  // monotone

            std::vector<int> U, I;
            std::set<int> sa(A.begin(), A.end()), sb(B.begin(), B.end());
            std::set_union(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(U));
            std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(I));
            CHECK(inst.rankOf(U) + inst.rankOf(I) <= inst.rankOf(A) + inst.rankOf(B));
        }

        // All bases share the full rank.
        for (const auto& b : inst.bases())
            CHECK(static_cast<int>(b.size()) == inst.rank());
    }
}
