#include "geomjoin/convex.hpp"

#include <algorithm>

namespace geomjoin {

namespace {

void checkFamilyDims(const std::vector<std::vector<QPoint>>& family, const char* where) {
    if (family.empty()) throw InputError(std::string(where) + ": empty family");
    int d = -1;
    for (const auto& member : family) {
        if (member.empty()) throw InputError(std::string(where) + ": empty family member");
        for (const auto& p : member) {
            if (d < 0) d = p.dim();
            if (p.dim() != d) throw InputError(std::string(where) + ": dimension mismatch");
        }
    }
}

}  // namespace

std::optional<std::vector<Rat>> inConvexHull(const QPoint& p, const std::vector<QPoint>& S,
                                             LpBudget* budget) {
    if (S.empty()) return std::nullopt;
    const int d = p.dim();
    for (const auto& s : S) requireDim(s, d, "inConvexHull");

    // Necessary condition first: p must lie in the bounding box.
    if (!Box::ofPoints(S).contains(p)) return std::nullopt;

    if (budget) budget->charge();
    LinearSystem sys;
    const int lambda = sys.addVariables(static_cast<int>(S.size()), VarKind::NonNeg);
    for (int c = 0; c < d; ++c) {
        std::vector<std::pair<int, Rat>> terms;
        terms.reserve(S.size());
        for (std::size_t i = 0; i < S.size(); ++i)
            terms.emplace_back(lambda + static_cast<int>(i), S[i][c]);
        sys.addConstraint(terms, Rel::Eq, p[c]);
    }
    std::vector<std::pair<int, Rat>> sum;
    for (std::size_t i = 0; i < S.size(); ++i) sum.emplace_back(lambda + static_cast<int>(i), Rat(1));
    sys.addConstraint(sum, Rel::Eq, Rat(1));

    LPOutcome out = sys.solveFeasibility();
    if (!out.feasible) return std::nullopt;
    return out.witness;
}

std::optional<CommonPoint> commonPointOfHulls(const std::vector<std::vector<QPoint>>& family,
                                              LpBudget* budget) {
    checkFamilyDims(family, "simplicesIntersect");
    const int d = family[0][0].dim();
    const std::size_t k = family.size();

    if (k == 1) {
        CommonPoint cp;
        cp.point = family[0][0];
        std::vector<Rat> w(family[0].size(), Rat(0));
        w[0] = 1;
        cp.weights.push_back(std::move(w));
        return cp;
    }

    // Bounding boxes must share a point.
    Box box = Box::ofPoints(family[0]);
    for (std::size_t i = 1; i < k; ++i) box = Box::intersect(box, Box::ofPoints(family[i]));
    if (box.empty()) return std::nullopt;

    if (budget) budget->charge();
    LinearSystem sys;
    std::vector<int> first(k);
    for (std::size_t i = 0; i < k; ++i) {
        first[i] = sys.addVariables(static_cast<int>(family[i].size()), VarKind::NonNeg);
        std::vector<std::pair<int, Rat>> sum;
        for (std::size_t j = 0; j < family[i].size(); ++j)
            sum.emplace_back(first[i] + static_cast<int>(j), Rat(1));
        sys.addConstraint(sum, Rel::Eq, Rat(1));
    }
    // Coincidence: member 0's point equals member i's point, coordinatewise.
    for (std::size_t i = 1; i < k; ++i) {
        for (int c = 0; c < d; ++c) {
            std::vector<std::pair<int, Rat>> terms;
            for (std::size_t j = 0; j < family[0].size(); ++j)
                terms.emplace_back(first[0] + static_cast<int>(j), family[0][j][c]);
            for (std::size_t j = 0; j < family[i].size(); ++j)
                terms.emplace_back(first[i] + static_cast<int>(j), -family[i][j][c]);
            sys.addConstraint(terms, Rel::Eq, Rat(0));
        }
    }

    LPOutcome out = sys.solveFeasibility();
    if (!out.feasible) return std::nullopt;

    CommonPoint cp;
    cp.point = QPoint::zero(d);
    for (std::size_t j = 0; j < family[0].size(); ++j) {
        const Rat& w = out.witness[static_cast<std::size_t>(first[0]) + j];
        if (w == 0) continue;
        for (int c = 0; c < d; ++c) cp.point[c] += w * family[0][j][c];
    }
    cp.weights.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
        cp.weights[i].assign(family[i].size(), Rat(0));
        for (std::size_t j = 0; j < family[i].size(); ++j)
            cp.weights[i][j] = out.witness[static_cast<std::size_t>(first[i]) + j];
    }
    return cp;
}

std::optional<QPoint> simplicesIntersect(const std::vector<std::vector<QPoint>>& family,
                                         LpBudget* budget) {
    auto cp = commonPointOfHulls(family, budget);
    if (!cp) return std::nullopt;
    return std::move(cp->point);
}

std::optional<Hyperplane> separatingHyperplane(const std::vector<QPoint>& A, const QPoint& o,
                                               LpBudget* budget) {
    const int d = o.dim();
    if (A.empty()) {
        // Any hyperplane off o works; use the first coordinate direction.
        Hyperplane h;
        h.normal.assign(static_cast<std::size_t>(d), Rat(0));
        h.normal[0] = 1;
        h.offset = o[0] + 1;
        return h;
    }
    for (const auto& a : A) requireDim(a, d, "separatingHyperplane");

    if (budget) budget->charge();
    // Membership LP for o in conv A; its Farkas certificate is the separator.
    LinearSystem sys;
    const int lambda = sys.addVariables(static_cast<int>(A.size()), VarKind::NonNeg);
    for (int c = 0; c < d; ++c) {
        std::vector<std::pair<int, Rat>> terms;
        for (std::size_t i = 0; i < A.size(); ++i)
            terms.emplace_back(lambda + static_cast<int>(i), A[i][c]);
        sys.addConstraint(terms, Rel::Eq, o[c]);
    }
    std::vector<std::pair<int, Rat>> sum;
    for (std::size_t i = 0; i < A.size(); ++i) sum.emplace_back(lambda + static_cast<int>(i), Rat(1));
    sys.addConstraint(sum, Rel::Eq, Rat(1));

    LPOutcome out = sys.solveFeasibility();
    if (out.feasible) return std::nullopt;  // o in conv A: no separator exists

    // Farkas: w = multipliers of the d coordinate rows, y0 of the sum row.
    // Then <w, a> + y0 <= 0 for all a in A and <w, o> + y0 > 0.  Negating w
    // puts A strictly above o; split the slack to make both sides strict.
    Hyperplane h;
    h.normal.assign(static_cast<std::size_t>(d), Rat(0));
    for (int c = 0; c < d; ++c) h.normal[static_cast<std::size_t>(c)] = -out.farkas[static_cast<std::size_t>(c)];
    const Rat y0 = out.farkas[static_cast<std::size_t>(d)];
    h.offset = (y0 + h.evaluate(o)) / 2;
    return h;
}

bool rayHitsConvex(const QPoint& direction, const std::vector<QPoint>& S, LpBudget* budget) {
    if (direction.isZero()) throw InputError("rayHitsConvex: zero direction");
    if (S.empty()) return false;
    const int d = direction.dim();
    for (const auto& s : S) requireDim(s, d, "rayHitsConvex");

    if (budget) budget->charge();
    LinearSystem sys;
    const int lambda = sys.addVariables(static_cast<int>(S.size()), VarKind::NonNeg);
    const int sVar = sys.addVariable(VarKind::NonNeg, "s");
    for (int c = 0; c < d; ++c) {
        std::vector<std::pair<int, Rat>> terms;
        for (std::size_t i = 0; i < S.size(); ++i)
            terms.emplace_back(lambda + static_cast<int>(i), S[i][c]);
        terms.emplace_back(sVar, -direction[c]);
        sys.addConstraint(terms, Rel::Eq, Rat(0));
    }
    std::vector<std::pair<int, Rat>> sum;
    for (std::size_t i = 0; i < S.size(); ++i) sum.emplace_back(lambda + static_cast<int>(i), Rat(1));
    sys.addConstraint(sum, Rel::Eq, Rat(1));

    return sys.solveFeasibility().feasible;
}

std::optional<ParamInterval> segmentHullInterval(const QPoint& a, const QPoint& b,
                                                 const std::vector<QPoint>& body,
                                                 LpBudget* budget) {
    if (body.empty()) return std::nullopt;
    const int d = a.dim();
    requireDim(b, d, "segmentHullInterval");
    for (const auto& p : body) requireDim(p, d, "segmentHullInterval");

    // Quick reject: the segment's box must meet the body's box.
    if (!Box::ofPoints({a, b}).overlaps(Box::ofPoints(body))) return std::nullopt;

    LinearSystem sys;
    const int lambda = sys.addVariables(static_cast<int>(body.size()), VarKind::NonNeg);
    const int tVar = sys.addVariable(VarKind::NonNeg, "t");
    sys.addConstraint({{tVar, Rat(1)}}, Rel::Le, Rat(1));
    for (int c = 0; c < d; ++c) {
        std::vector<std::pair<int, Rat>> terms;
        for (std::size_t i = 0; i < body.size(); ++i)
            terms.emplace_back(lambda + static_cast<int>(i), body[i][c]);
        terms.emplace_back(tVar, a[c] - b[c]);
        sys.addConstraint(terms, Rel::Eq, a[c]);
    }
    std::vector<std::pair<int, Rat>> sum;
    for (std::size_t i = 0; i < body.size(); ++i) sum.emplace_back(lambda + static_cast<int>(i), Rat(1));
    sys.addConstraint(sum, Rel::Eq, Rat(1));

    if (budget) budget->charge();
    OptResult lo = sys.optimizeVariable(tVar, false);
    if (!lo.feasible) return std::nullopt;
    if (budget) budget->charge();
    OptResult hi = sys.optimizeVariable(tVar, true);
    return ParamInterval{lo.value, hi.value};
}

bool segmentInUnion(const QPoint& a, const QPoint& b,
                    const std::vector<std::vector<QPoint>>& family, LpBudget* budget) {
    const int d = a.dim();
    requireDim(b, d, "segmentInUnion");
    if (family.empty()) return false;

    std::vector<ParamInterval> intervals;
    intervals.reserve(family.size());
    for (const auto& body : family) {
        if (body.empty()) continue;
        if (auto iv = segmentHullInterval(a, b, body, budget)) intervals.push_back(*iv);
    }
    if (intervals.empty()) return false;

    std::sort(intervals.begin(), intervals.end(),
              [](const ParamInterval& x, const ParamInterval& y) {
                  return x.lo < y.lo || (x.lo == y.lo && x.hi < y.hi);
              });

    // Closed-interval sweep: endpoint-touching intervals do cover.
    Rat covered = 0;
    if (intervals[0].lo > 0) return false;
    for (const auto& iv : intervals) {
        if (iv.lo > covered) return false;
        if (iv.hi > covered) covered = iv.hi;
        if (covered >= 1) return true;
    }
    return covered >= 1;
}

}  // namespace geomjoin
