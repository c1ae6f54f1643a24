#include "geomjoin/nerve.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace geomjoin {

namespace {

struct FaceHash {
    std::size_t operator()(const Face& f) const {
        std::size_t h = 1469598103934665603ull;
        for (int v : f) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

std::vector<std::uint64_t> andMask(const std::vector<std::uint64_t>& a,
                                   const std::vector<std::uint64_t>& b) {
    std::vector<std::uint64_t> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] & b[i];
    return r;
}

bool anyBit(const std::vector<std::uint64_t>& m) {
    for (auto w : m)
        if (w) return true;
    return false;
}

int firstBit(const std::vector<std::uint64_t>& m) {
    for (std::size_t w = 0; w < m.size(); ++w)
        if (m[w]) return static_cast<int>(w * 64) + std::countr_zero(m[w]);
    return -1;
}

}  // namespace

NerveBody::NerveBody(std::vector<QPoint> points, std::vector<std::uint64_t> labelMask)
    : points_(std::move(points)), labelMask_(std::move(labelMask)) {
    box_ = Box::ofPoints(points_);
    const int d = points_[0].dim();
    const int k = static_cast<int>(points_.size());
    if (k > d + 1) return;  // affinely dependent for sure; LP fallback

    // Rows of the (d+1) x k system [coords; 1] * lambda = [p; 1].
    std::vector<std::vector<Rat>> rows(static_cast<std::size_t>(d) + 1,
                                       std::vector<Rat>(static_cast<std::size_t>(k)));
    for (int c = 0; c < d; ++c)
        for (int j = 0; j < k; ++j)
            rows[static_cast<std::size_t>(c)][static_cast<std::size_t>(j)] =
                points_[static_cast<std::size_t>(j)][c];
    for (int j = 0; j < k; ++j) rows[static_cast<std::size_t>(d)][static_cast<std::size_t>(j)] = 1;

    // Select k rows whose square block is invertible, maintaining
    //   work = inv * (selected original rows),  work = column permutation of I.
    std::vector<std::vector<Rat>> work, inv;
    std::vector<int> selectedRows, pivotCols;
    std::vector<char> colPivoted(static_cast<std::size_t>(k), 0);
    for (int r = 0; r <= d && static_cast<int>(selectedRows.size()) < k; ++r) {
        std::vector<Rat> cand = rows[static_cast<std::size_t>(r)];
        std::vector<Rat> invRow(static_cast<std::size_t>(k), Rat(0));
        invRow[selectedRows.size()] = 1;
        for (std::size_t i = 0; i < work.size(); ++i) {
            const Rat f = cand[static_cast<std::size_t>(pivotCols[i])];
            if (f == 0) continue;
            for (int j = 0; j < k; ++j) {
                cand[static_cast<std::size_t>(j)] -= f * work[i][static_cast<std::size_t>(j)];
                invRow[static_cast<std::size_t>(j)] -= f * inv[i][static_cast<std::size_t>(j)];
            }
        }
        int pc = -1;
        for (int j = 0; j < k; ++j)
            if (!colPivoted[static_cast<std::size_t>(j)] && cand[static_cast<std::size_t>(j)] != 0) {
                pc = j;
                break;
            }
        if (pc < 0) continue;  // dependent row
        const Rat p = cand[static_cast<std::size_t>(pc)];
        for (int j = 0; j < k; ++j) {
            cand[static_cast<std::size_t>(j)] /= p;
            invRow[static_cast<std::size_t>(j)] /= p;
        }
        for (std::size_t i = 0; i < work.size(); ++i) {
            const Rat f = work[i][static_cast<std::size_t>(pc)];
            if (f == 0) continue;
            for (int j = 0; j < k; ++j) {
                work[i][static_cast<std::size_t>(j)] -= f * cand[static_cast<std::size_t>(j)];
                inv[i][static_cast<std::size_t>(j)] -= f * invRow[static_cast<std::size_t>(j)];
            }
        }
        work.push_back(std::move(cand));
        inv.push_back(std::move(invRow));
        selectedRows.push_back(r);
        pivotCols.push_back(pc);
        colPivoted[static_cast<std::size_t>(pc)] = 1;
    }
    if (static_cast<int>(selectedRows.size()) == k) {
        affinelyIndependent_ = true;
        solver_ = std::move(inv);
        selectedRows_ = std::move(selectedRows);
        pivotCols_ = std::move(pivotCols);
    }
}

std::optional<std::vector<Rat>> NerveBody::contains(const QPoint& p, LpBudget* budget) const {
    if (!box_.contains(p)) return std::nullopt;
    if (!affinelyIndependent_) return inConvexHull(p, points_, budget);

    const int d = p.dim();
    const int k = static_cast<int>(points_.size());
    std::vector<Rat> bsel(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) {
        const int row = selectedRows_[static_cast<std::size_t>(j)];
        bsel[static_cast<std::size_t>(j)] = row < d ? p[row] : Rat(1);
    }
    std::vector<Rat> lambda(static_cast<std::size_t>(k), Rat(0));
    for (int i = 0; i < k; ++i) {
        Rat acc = 0;
        for (int j = 0; j < k; ++j)
            if (bsel[static_cast<std::size_t>(j)] != 0)
                acc += solver_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                       bsel[static_cast<std::size_t>(j)];
        if (acc < 0) return std::nullopt;
        lambda[static_cast<std::size_t>(pivotCols_[static_cast<std::size_t>(i)])] = std::move(acc);
    }
    // Residual check covers the rows the solver did not use.
    Rat sum = 0;
    for (const Rat& l : lambda) sum += l;
    if (sum != 1) return std::nullopt;
    for (int c = 0; c < d; ++c) {
        Rat acc = 0;
        for (int j = 0; j < k; ++j)
            if (lambda[static_cast<std::size_t>(j)] != 0)
                acc += lambda[static_cast<std::size_t>(j)] * points_[static_cast<std::size_t>(j)][c];
        if (acc != p[c]) return std::nullopt;
    }
    return lambda;
}

std::vector<NerveBody> basisBodies(const Instance& instance, long long basisCap) {
    const auto& bases = instance.bases(basisCap);
    const std::size_t words = (static_cast<std::size_t>(instance.ground().size()) + 63) / 64;
    std::vector<NerveBody> bodies;
    bodies.reserve(bases.size());
    for (const auto& basis : bases) {
        std::vector<std::uint64_t> mask(words, 0);
        for (int label : basis) {
            const auto idx = static_cast<std::size_t>(instance.ground().indexOf(label));
            mask[idx / 64] |= (std::uint64_t{1} << (idx % 64));
        }
        bodies.emplace_back(instance.pointsOf(basis), std::move(mask));
    }
    return bodies;
}

NerveBuild buildNerve(const Instance& instance, const NerveOptions& options) {
    const int d = instance.dimension();
    const int cap = options.dimensionCap < 0 ? d + 1 : options.dimensionCap;
    if (cap < 0) throw InputError("buildNerve: negative dimension cap");

    NerveBuild out;
    out.complex.dimensionCap = cap;
    out.complex.facesByDim.resize(static_cast<std::size_t>(cap) + 1);

    std::vector<NerveBody> bodies;
    try {
        bodies = basisBodies(instance, options.maxFaces >= 0 ? options.maxFaces : 5'000'000);
    } catch (const BudgetExceeded&) {
        out.complete = false;
        return out;
    }
    const int n = static_cast<int>(bodies.size());
    out.complex.vertexCount = n;

    struct FaceRec {
        std::vector<std::uint64_t> mask;
        Box box;
        std::optional<QPoint> witness;
    };

    long long facesBuilt = 0;
    auto faceBudgetOk = [&](long long next) {
        return options.maxFaces < 0 || next <= options.maxFaces;
    };

    std::vector<Face> prevFaces;
    std::vector<FaceRec> prevRecs;
    for (int i = 0; i < n; ++i) {
        if (!faceBudgetOk(facesBuilt + 1)) {
            out.complete = false;
            return out;
        }
        ++facesBuilt;
        out.complex.facesByDim[0].push_back({i});
        FaceRec rec;
        rec.mask = bodies[static_cast<std::size_t>(i)].labelMask();
        rec.box = bodies[static_cast<std::size_t>(i)].box();
        rec.witness = bodies[static_cast<std::size_t>(i)].points()[0];
        prevFaces.push_back({i});
        prevRecs.push_back(std::move(rec));
    }

    for (int dim = 1; dim <= cap && !prevFaces.empty(); ++dim) {
        const int size = dim + 1;  // subfamily size at this level
        std::unordered_map<Face, int, FaceHash> prevIndex;
        prevIndex.reserve(prevFaces.size() * 2);
        for (std::size_t i = 0; i < prevFaces.size(); ++i)
            prevIndex.emplace(prevFaces[i], static_cast<int>(i));

        std::vector<Face> curFaces;
        std::vector<FaceRec> curRecs;
        std::vector<int> subIdx;

        Face candidate, sub;
        for (std::size_t fi = 0; fi < prevFaces.size(); ++fi) {
            const Face& parent = prevFaces[fi];
            const FaceRec& parentRec = prevRecs[fi];
            for (int v = parent.back() + 1; v < n; ++v) {
                candidate = parent;
                candidate.push_back(v);

                bool closed = true;
                subIdx.assign(candidate.size() - 1, -1);
                for (std::size_t drop = 0; drop + 1 < candidate.size() && closed; ++drop) {
                    sub.clear();
                    for (std::size_t i = 0; i < candidate.size(); ++i)
                        if (i != drop) sub.push_back(candidate[i]);
                    auto it = prevIndex.find(sub);
                    if (it == prevIndex.end())
                        closed = false;
                    else
                        subIdx[drop] = it->second;
                }
                if (!closed) continue;

                const NerveBody& newBody = bodies[static_cast<std::size_t>(v)];
                FaceRec rec;
                rec.mask = andMask(parentRec.mask, newBody.labelMask());
                bool present = false;

                if (anyBit(rec.mask)) {
                    // All bodies share a ground point; use it as the witness.
                    present = true;
                    rec.witness = instance.ground().points[static_cast<std::size_t>(firstBit(rec.mask))];
                    rec.box = Box::intersect(parentRec.box, newBody.box());
                } else if (size >= d + 2) {
                    // Helly in R^d: all (d+1)-subfamilies intersect (they are
                    // faces by downward closure), hence so does the whole
                    // subfamily.  Witnesses are not needed above the LP levels.
                    present = true;
                    rec.box = Box::intersect(parentRec.box, newBody.box());
                } else {
                    rec.box = Box::intersect(parentRec.box, newBody.box());
                    if (!rec.box.empty()) {
                        try {
                            // A known common point of any subface needs to be
                            // tested only against the one body it misses.
                            if (parentRec.witness && newBody.contains(*parentRec.witness, options.budget)) {
                                present = true;
                                rec.witness = parentRec.witness;
                            }
                            for (std::size_t drop = 0; !present && drop + 1 < candidate.size(); ++drop) {
                                const auto& subRec = prevRecs[static_cast<std::size_t>(subIdx[drop])];
                                if (!subRec.witness) continue;
                                const auto& missingBody = bodies[static_cast<std::size_t>(candidate[drop])];
                                if (missingBody.contains(*subRec.witness, options.budget)) {
                                    present = true;
                                    rec.witness = subRec.witness;
                                }
                            }
                            if (!present) {
                                std::vector<std::vector<QPoint>> family;
                                family.reserve(candidate.size());
                                for (int b : candidate)
                                    family.push_back(bodies[static_cast<std::size_t>(b)].points());
                                ++out.lpCalls;
                                if (auto cp = commonPointOfHulls(family, options.budget)) {
                                    present = true;
                                    rec.witness = std::move(cp->point);
                                }
                            }
                        } catch (const BudgetExceeded&) {
                            out.complete = false;
                            out.complex.facesByDim[static_cast<std::size_t>(dim)] = curFaces;
                            return out;
                        }
                    }
                }

                if (!present) continue;
                if (!faceBudgetOk(facesBuilt + 1)) {
                    out.complete = false;
                    out.complex.facesByDim[static_cast<std::size_t>(dim)] = curFaces;
                    return out;
                }
                ++facesBuilt;
                curFaces.push_back(candidate);
                curRecs.push_back(std::move(rec));
            }
        }

        out.complex.facesByDim[static_cast<std::size_t>(dim)] = curFaces;
        prevFaces = std::move(curFaces);
        prevRecs = std::move(curRecs);
    }

    return out;
}

}  // namespace geomjoin
