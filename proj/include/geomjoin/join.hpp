#ifndef GEOMJOIN_JOIN_HPP
#define GEOMJOIN_JOIN_HPP

#include <optional>
#include <vector>

#include "geomjoin/convex.hpp"
#include "geomjoin/matroid.hpp"

namespace geomjoin {

/**
 * Membership in the geometric join: an independent label set of size at
 * most d+1 together with barycentric weights reproducing the query point.
 */
struct MembershipWitness {
    std::vector<int> labels;
    std::vector<Rat> weights;
};

/** Exact re-substitution check, usable on deserialized witnesses. */
bool verifyMembership(const Instance& instance, const QPoint& p, const MembershipWitness& w);

/**
 * Searches independent sets of size <= min(rank, d+1) in lexicographic
 * order and returns the first whose hull contains p.
 */
std::optional<MembershipWitness> joinContains(const Instance& instance, const QPoint& p,
                                              LpBudget* budget = nullptr);

struct ColorfulCaratheodoryReport {
    bool hypothesisMet = false;           // p in conv X_i for every class
    std::vector<bool> inClassHull;        // per class
    std::optional<MembershipWitness> witness;
};

/**
 * Checks the colorful membership statement on one instance: when p lies in
 * every class hull, a join membership witness must exist.  A miss would
 * contradict a proved theorem and raises InternalInconsistencyError.
 */
ColorfulCaratheodoryReport colorfulCaratheodoryCheck(const Instance& instance, const QPoint& p,
                                                     LpBudget* budget = nullptr);

}  // namespace geomjoin

#endif
