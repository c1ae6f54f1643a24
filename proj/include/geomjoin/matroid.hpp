#ifndef GEOMJOIN_MATROID_HPP
#define GEOMJOIN_MATROID_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "geomjoin/geometry.hpp"

namespace geomjoin {

/** Labeled finite point set in R^d.  Labels are stable integer identities. */
struct GroundSet {
    int dimension = 0;
    std::vector<int> labels;      // strictly increasing
    std::vector<QPoint> points;   // parallel to labels

    int size() const { return static_cast<int>(labels.size()); }
    int indexOf(int label) const;            // InputError when unknown
    const QPoint& pointOf(int label) const { return points[static_cast<std::size_t>(indexOf(label))]; }
};

struct PartitionSpec {
    std::vector<std::vector<int>> classes;  // color classes X_1..X_m by label
};

struct UniformSpec {
    int rank = 0;
};

struct ExplicitBasesSpec {
    std::vector<std::vector<int>> bases;
};

using MatroidSpec = std::variant<PartitionSpec, UniformSpec, ExplicitBasesSpec>;

/**
 * A ground set together with a loopless matroid over its labels.
 * Everything is validated at construction; instances are immutable
 * afterwards and safe to share across threads.
 *
 * Explicit basis lists are checked against the basis exchange axiom by
 * brute force so that a silent non-matroid can never enter the pipeline.
 */
class Instance {
  public:
    Instance(GroundSet ground, MatroidSpec spec);

    int dimension() const { return ground_.dimension; }
    int rank() const { return rank_; }
    const GroundSet& ground() const { return ground_; }
    const MatroidSpec& matroid() const { return spec_; }

    bool isPartition() const { return std::holds_alternative<PartitionSpec>(spec_); }
    /** Number of color classes m; partition instances only. */
    int classCount() const;
    const std::vector<std::vector<int>>& classes() const;
    /** Class index of a label; partition instances only. */
    int classOf(int label) const;

    /** Matroid rank of a label set (duplicates ignored). */
    int rankOf(std::span<const int> labels) const;
    bool isIndependent(std::span<const int> labels) const;

    /**
     * The smallest label b in B \ A with A + b independent.
     * A, B must be independent with |A| < |B|.
     */
    int augment(std::span<const int> A, std::span<const int> B) const;

    /**
     * Visits every independent set of size <= maxSize exactly once in
     * lexicographic order (as sorted label sequences), starting with the
     * empty set.  Return false from the visitor to stop early.
     */
    void forEachIndependent(int maxSize,
                            const std::function<bool(const std::vector<int>&)>& visit) const;
    std::vector<std::vector<int>> independentSets(int maxSize) const;

    /** All bases (size == rank) in lexicographic order; cached. */
    const std::vector<std::vector<int>>& bases(long long cap = 5'000'000) const;

    std::vector<QPoint> pointsOf(std::span<const int> labels) const;

  private:
    void validate();
    bool extendsIndependent(const std::vector<int>& sortedSet, int label) const;

    GroundSet ground_;
    MatroidSpec spec_;
    int rank_ = 0;

    // Derived lookups.
    std::vector<int> classOf_;                       // per ground index, partition only
    std::vector<std::vector<std::uint64_t>> basesContaining_;  // per ground index, explicit only
    std::vector<std::vector<int>> explicitSorted_;

    mutable std::vector<std::vector<int>> basesCache_;
    mutable bool basesCached_ = false;
};

}  // namespace geomjoin

#endif
