#ifndef GEOMJOIN_CONVEX_HPP
#define GEOMJOIN_CONVEX_HPP

#include <atomic>
#include <optional>
#include <vector>

#include "geomjoin/geometry.hpp"
#include "geomjoin/lp.hpp"

namespace geomjoin {

/**
 * Shared LP-call budget.  Convexity predicates charge one unit per solve and
 * throw BudgetExceeded once the cap is passed; a null budget never limits.
 */
struct LpBudget {
    std::atomic<long long> used{0};
    long long cap = -1;  // negative: unlimited

    void charge() {
        const long long u = used.fetch_add(1, std::memory_order_relaxed) + 1;
        if (cap >= 0 && u > cap) throw BudgetExceeded("lp call budget exceeded");
    }
};

/**
 * Barycentric membership: weights lambda >= 0 with sum 1 and
 * sum lambda_i S_i == p, or nullopt when p is outside conv S.
 */
std::optional<std::vector<Rat>> inConvexHull(const QPoint& p, const std::vector<QPoint>& S,
                                             LpBudget* budget = nullptr);

/** Common point of the convex hulls plus per-member barycentric weights. */
struct CommonPoint {
    QPoint point;
    std::vector<std::vector<Rat>> weights;  // one weight vector per family member
};

std::optional<CommonPoint> commonPointOfHulls(const std::vector<std::vector<QPoint>>& family,
                                              LpBudget* budget = nullptr);

/** A point in the intersection of the hulls of the family, if any. */
std::optional<QPoint> simplicesIntersect(const std::vector<std::vector<QPoint>>& family,
                                         LpBudget* budget = nullptr);

/**
 * A hyperplane with <n,a> > offset for every a in A and <n,o> < offset,
 * derived from the Farkas certificate of the membership LP.  nullopt exactly
 * when o lies in conv A.
 */
std::optional<Hyperplane> separatingHyperplane(const std::vector<QPoint>& A, const QPoint& o,
                                               LpBudget* budget = nullptr);

/** Does the ray {s * direction : s >= 0} from the origin meet conv S? */
bool rayHitsConvex(const QPoint& direction, const std::vector<QPoint>& S,
                   LpBudget* budget = nullptr);

/**
 * Exact parameter interval of {t in [0,1] : a + t(b-a) in conv body},
 * or nullopt when the segment misses the body.
 */
struct ParamInterval {
    Rat lo, hi;
};
std::optional<ParamInterval> segmentHullInterval(const QPoint& a, const QPoint& b,
                                                 const std::vector<QPoint>& body,
                                                 LpBudget* budget = nullptr);

/**
 * Is the closed segment [a,b] contained in the union of the members'
 * convex hulls?  Decided by exact interval covering of [0,1].
 */
bool segmentInUnion(const QPoint& a, const QPoint& b,
                    const std::vector<std::vector<QPoint>>& family,
                    LpBudget* budget = nullptr);

}  // namespace geomjoin

#endif
