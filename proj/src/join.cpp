#include "geomjoin/join.hpp"

#include <algorithm>

namespace geomjoin {

bool verifyMembership(const Instance& instance, const QPoint& p, const MembershipWitness& w) {
    if (w.labels.size() != w.weights.size() || w.labels.empty()) return false;
    if (!instance.isIndependent(w.labels)) return false;
    if (static_cast<int>(w.labels.size()) > instance.dimension() + 1) return false;
    Rat sum = 0;
    QPoint rec = QPoint::zero(instance.dimension());
    for (std::size_t i = 0; i < w.labels.size(); ++i) {
        if (w.weights[i] < 0) return false;
        sum += w.weights[i];
        rec = rec + (w.weights[i] * instance.ground().pointOf(w.labels[i]));
    }
    return sum == 1 && rec == p;
}

std::optional<MembershipWitness> joinContains(const Instance& instance, const QPoint& p,
                                              LpBudget* budget) {
    requireDim(p, instance.dimension(), "joinContains");
    const int maxSize = std::min(instance.rank(), instance.dimension() + 1);

    std::optional<MembershipWitness> found;
    instance.forEachIndependent(maxSize, [&](const std::vector<int>& labels) {
        if (labels.empty()) return true;
        const auto pts = instance.pointsOf(labels);
        if (auto weights = inConvexHull(p, pts, budget)) {
            found = MembershipWitness{labels, std::move(*weights)};
            return false;
        }
        return true;
    });
    return found;
}

ColorfulCaratheodoryReport colorfulCaratheodoryCheck(const Instance& instance, const QPoint& p,
                                                     LpBudget* budget) {
    if (!instance.isPartition())
        throw InputError("colorfulCaratheodoryCheck: requires a partition instance");
    const int m = instance.classCount();
    if (m < instance.dimension() + 1)
        throw InputError("colorfulCaratheodoryCheck: requires m >= d+1 classes");
    requireDim(p, instance.dimension(), "colorfulCaratheodoryCheck");

    ColorfulCaratheodoryReport report;
    report.inClassHull.resize(static_cast<std::size_t>(m));
    report.hypothesisMet = true;
    for (int i = 0; i < m; ++i) {
        const auto pts = instance.pointsOf(instance.classes()[static_cast<std::size_t>(i)]);
        const bool inside = inConvexHull(p, pts, budget).has_value();
        report.inClassHull[static_cast<std::size_t>(i)] = inside;
        if (!inside) report.hypothesisMet = false;
    }
    if (!report.hypothesisMet) return report;

    report.witness = joinContains(instance, p, budget);
    if (!report.witness)
        throw InternalInconsistencyError(
            "colorful membership violated: point in every class hull but not in the join");
    return report;
}

}  // namespace geomjoin
