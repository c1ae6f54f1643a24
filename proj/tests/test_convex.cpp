#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <vector>

#include "geomjoin/convex.hpp"
#include "geomjoin/errors.hpp"

using namespace geomjoin;

namespace {

QPoint pt(std::initializer_list<int> cs) {
    QPoint p;
    for (int c : cs) p.coords.emplace_back(c);
    return p;
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

QPoint randomPoint(Rng& rng, int d, int bound) {
    QPoint p;
    for (int i = 0; i < d; ++i) p.coords.emplace_back(rng.intIn(-bound, bound));
    return p;
}

bool strictlySeparates(const Hyperplane& h, const std::vector<QPoint>& A, const QPoint& o) {
    for (const auto& a : A)
        if (!(h.evaluate(a) > h.offset)) return false;
    return h.evaluate(o) < h.offset;
}

}  // namespace

TEST_CASE("inConvexHull: vertex membership gives a unit witness") {
    std::vector<QPoint> S = {pt({2, 3}), pt({-1, 4}), pt({0, 0})};
    auto w = inConvexHull(pt({2, 3}), S);
    REQUIRE(w);
    CHECK((*w)[0] == Rat(1));
    CHECK((*w)[1] == Rat(0));
    CHECK((*w)[2] == Rat(0));
}

TEST_CASE("inConvexHull: interior point has the unique exact witness") {
    std::vector<QPoint> S = {pt({1, 0}), pt({-1, 1}), pt({-1, -1})};
    auto w = inConvexHull(pt({0, 0}), S);
    REQUIRE(w);
    CHECK((*w)[0] == Rat(1, 2));
    CHECK((*w)[1] == Rat(1, 4));
    CHECK((*w)[2] == Rat(1, 4));
}

TEST_CASE("inConvexHull: outside the bounding box is absent") {
    std::vector<QPoint> S = {pt({0, 0}), pt({1, 0}), pt({0, 1})};
    CHECK_FALSE(inConvexHull(pt({5, 5}), S));
}

TEST_CASE("inConvexHull: empty set is absent") {
    CHECK_FALSE(inConvexHull(pt({0}), {}));
}

TEST_CASE("witness reconstructs the query point exactly") {
    std::vector<QPoint> S = {pt({0, 0}), pt({4, 0}), pt({0, 4}), pt({4, 4})};
    QPoint p{Rat(1, 3), Rat(7, 5)};
    auto w = inConvexHull(p, S);
    REQUIRE(w);
    QPoint rec = QPoint::zero(2);
    Rat sum = 0;
    for (std::size_t i = 0; i < S.size(); ++i) {
        rec = rec + ((*w)[i] * S[i]);
        sum += (*w)[i];
        CHECK((*w)[i] >= 0);
    }
    CHECK(sum == Rat(1));
    CHECK(rec == p);
}

TEST_CASE("simplicesIntersect: single member returns a vertex") {
    auto p = simplicesIntersect({{pt({3, 1}), pt({0, 0})}});
    REQUIRE(p);
    CHECK(*p == pt({3, 1}));
}

TEST_CASE("simplicesIntersect: crossing segments meet at (1,1)") {
    std::vector<std::vector<QPoint>> family = {
        {pt({0, 0}), pt({2, 2})},
        {pt({0, 2}), pt({2, 0})},
    };
    auto p = simplicesIntersect(family);
    REQUIRE(p);
    CHECK(*p == pt({1, 1}));  // unique crossing, solved by 2x2 elimination
}

TEST_CASE("simplicesIntersect: separated triangles are absent") {
    std::vector<std::vector<QPoint>> family = {
        {pt({0, 0}), pt({1, 0}), pt({0, 1})},
        {pt({10, 0}), pt({11, 0}), pt({10, 1})},
    };
    CHECK_FALSE(simplicesIntersect(family));
}

TEST_CASE("simplicesIntersect: monotone under subfamilies") {
    Rng rng{7ull};
    for (int iter = 0; iter < 40; ++iter) {
        std::vector<std::vector<QPoint>> family;
        const int k = rng.intIn(2, 4);
        for (int i = 0; i < k; ++i) {
            std::vector<QPoint> body;
            const int n = rng.intIn(1, 4);
            for (int j = 0; j < n; ++j) body.push_back(randomPoint(rng, 2, 4));
            family.push_back(std::move(body));
        }
        if (!simplicesIntersect(family)) continue;
        for (int drop = 0; drop < k; ++drop) {
            std::vector<std::vector<QPoint>> sub;
            for (int i = 0; i < k; ++i)
                if (i != drop) sub.push_back(family[static_cast<std::size_t>(i)]);
            CHECK(simplicesIntersect(sub));
        }
    }
}

TEST_CASE("simplicesIntersect input validation") {
    CHECK_THROWS_AS(simplicesIntersect({}), InputError);
    CHECK_THROWS_AS(simplicesIntersect({{pt({0, 0})}, {}}), InputError);
    CHECK_THROWS_AS(simplicesIntersect({{pt({0, 0})}, {pt({1})}}), InputError);
}

TEST_CASE("separatingHyperplane: points on a line") {
    std::vector<QPoint> A = {pt({1, 0}), pt({2, 0})};
    auto h = separatingHyperplane(A, pt({0, 0}));
    REQUIRE(h);
    CHECK(strictlySeparates(*h, A, pt({0, 0})));
}

TEST_CASE("separatingHyperplane: absent exactly when inside") {
    std::vector<QPoint> A = {pt({1, 0}), pt({-1, 1}), pt({-1, -1})};
    CHECK_FALSE(separatingHyperplane(A, pt({0, 0})));
}

TEST_CASE("separatingHyperplane: single point") {
    std::vector<QPoint> A = {pt({1, 1})};
    auto h = separatingHyperplane(A, pt({0, 0}));
    REQUIRE(h);
    CHECK(strictlySeparates(*h, A, pt({0, 0})));
}

TEST_CASE("separatingHyperplane: empty A returns a deterministic plane off o") {
    auto h1 = separatingHyperplane({}, pt({3, 4}));
    auto h2 = separatingHyperplane({}, pt({3, 4}));
    REQUIRE(h1);
    REQUIRE(h2);
    CHECK(h1->normal == h2->normal);
    CHECK(h1->offset == h2->offset);
    CHECK(h1->evaluate(pt({3, 4})) < h1->offset);
}

TEST_CASE("hull membership and separation are exactly dual") {
    Rng rng{99ull};
    int insides = 0, outsides = 0;
    for (int iter = 0; iter < 120; ++iter) {
        const int d = rng.intIn(1, 3);
        std::vector<QPoint> S;
        const int n = rng.intIn(1, d + 3);
        for (int i = 0; i < n; ++i) S.push_back(randomPoint(rng, d, 5));
        QPoint p = randomPoint(rng, d, 6);
        auto member = inConvexHull(p, S);
        auto sep = separatingHyperplane(S, p);
        CHECK(member.has_value() != sep.has_value());
        if (member) {
            ++insides;
        } else {
            ++outsides;
            CHECK(strictlySeparates(*sep, S, p));
        }
    }
    CHECK(insides > 10);
    CHECK(outsides > 10);
}

TEST_CASE("rayHitsConvex: set containing the origin is hit with s=0") {
    CHECK(rayHitsConvex(pt({1, 0, 0}), {pt({0, 0, 0}), pt({5, 5, 5})}));
}

TEST_CASE("rayHitsConvex: wrong halfspace misses") {
    std::vector<QPoint> tri = {pt({-1, 0, 0}), pt({-1, 1, 0}), pt({-1, 0, 1})};
    CHECK_FALSE(rayHitsConvex(pt({1, 0, 0}), tri));
    CHECK(rayHitsConvex(pt({-1, 0, 0}), tri));
}

TEST_CASE("rayHitsConvex: diagonal ray meets the anti-diagonal segment") {
    CHECK(rayHitsConvex(pt({1, 1}), {pt({0, 2}), pt({2, 0})}));
}

TEST_CASE("rayHitsConvex: zero direction is an input error") {
    CHECK_THROWS_AS(rayHitsConvex(pt({0, 0}), {pt({1, 1})}), InputError);
}

TEST_CASE("segmentHullInterval: exact parameter interval") {
    // Segment [0,2] on the line against body [0,1]: t in [0, 1/2].
    auto iv = segmentHullInterval(pt({0}), pt({2}), {pt({0}), pt({1})});
    REQUIRE(iv);
    CHECK(iv->lo == Rat(0));
    CHECK(iv->hi == Rat(1, 2));
}

TEST_CASE("segmentInUnion: one simplex containing the segment") {
    std::vector<std::vector<QPoint>> family = {{pt({0, 0}), pt({4, 0}), pt({0, 4})}};
    CHECK(segmentInUnion(pt({1, 1}), pt({2, 0}), family));
}

TEST_CASE("segmentInUnion: endpoint-touching intervals cover") {
    std::vector<std::vector<QPoint>> family = {{pt({0}), pt({1})}, {pt({1}), pt({2})}};
    CHECK(segmentInUnion(pt({0}), pt({2}), family));
}

TEST_CASE("segmentInUnion: a gap breaks the cover") {
    // [0,1] and [3/2,2] leave the open gap (1, 3/2) uncovered.
    std::vector<std::vector<QPoint>> family = {
        {pt({0}), pt({1})},
        {QPoint{Rat(3, 2)}, pt({2})},
    };
    CHECK_FALSE(segmentInUnion(pt({0}), pt({2}), family));
}

TEST_CASE("segmentInUnion: empty family") {
    CHECK_FALSE(segmentInUnion(pt({0}), pt({1}), {}));
}

TEST_CASE("lp budget throttles convex predicates") {
    LpBudget budget;
    budget.cap = 1;
    std::vector<QPoint> S = {pt({1, 0}), pt({-1, 1}), pt({-1, -1})};
    CHECK(inConvexHull(pt({0, 0}), S, &budget));
    CHECK_THROWS_AS(inConvexHull(pt({0, 0}), S, &budget), BudgetExceeded);
}
