#ifndef GEOMJOIN_NERVE_HPP
#define GEOMJOIN_NERVE_HPP

#include <optional>
#include <vector>

#include "geomjoin/convex.hpp"
#include "geomjoin/matroid.hpp"
#include "geomjoin/simplicial_complex.hpp"

namespace geomjoin {

struct NerveOptions {
    int dimensionCap = -1;    // negative: default d+1
    long long maxFaces = -1;  // negative: unlimited
    LpBudget* budget = nullptr;
};

struct NerveBuild {
    SimplicialComplex complex;
    bool complete = true;   // false when a budget stopped the build early
    long long lpCalls = 0;  // intersection LPs actually solved
};

/**
 * Nerve of the family of basis simplices: vertex i is the hull of the i-th
 * basis (in lexicographic basis order); a face is any subfamily with a
 * common point, stored up to the dimension cap.
 *
 * The build is level-by-level and only candidates with all subfaces present
 * are tested (intersection monotonicity).  Remaining decisions are exact
 * but most avoid the LP: subfamilies sharing a ground point intersect in
 * it; subfamilies of size >= d+2 whose subfamilies all intersect are
 * intersecting by Helly's theorem; a known common point of the parent face
 * often lies in the added body, which a precomputed barycentric solver
 * checks directly.
 */
NerveBuild buildNerve(const Instance& instance, const NerveOptions& options = {});

/**
 * One convex body of the nerve family, with the exact fast-membership
 * machinery precomputed.  Exposed for the filtration and certificate
 * modules, which walk the same family.
 */
class NerveBody {
  public:
    NerveBody(std::vector<QPoint> points, std::vector<std::uint64_t> labelMask);

    const std::vector<QPoint>& points() const { return points_; }
    const Box& box() const { return box_; }
    const std::vector<std::uint64_t>& labelMask() const { return labelMask_; }

    /**
     * Barycentric weights of p if p lies in the hull.  Affinely independent
     * vertex sets are answered by a precomputed linear solve; others fall
     * back to the membership LP.
     */
    std::optional<std::vector<Rat>> contains(const QPoint& p, LpBudget* budget = nullptr) const;

  private:
    std::vector<QPoint> points_;
    std::vector<std::uint64_t> labelMask_;
    Box box_;

    bool affinelyIndependent_ = false;
    std::vector<std::vector<Rat>> solver_;  // inverse of the selected row block
    std::vector<int> selectedRows_;         // rows of [coords; 1] the solver uses
};

/** The basis bodies of an instance, in basis order. */
std::vector<NerveBody> basisBodies(const Instance& instance, long long basisCap = 5'000'000);

}  // namespace geomjoin

#endif
