#include "geomjoin/matroid.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

#include "geomjoin/errors.hpp"

namespace geomjoin {

namespace {

std::vector<int> sortedUnique(std::span<const int> labels) {
    std::vector<int> s(labels.begin(), labels.end());
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

bool anyWord(const std::vector<std::uint64_t>& a) {
    for (auto w : a)
        if (w) return true;
    return false;
}

}  // namespace

int GroundSet::indexOf(int label) const {
    auto it = std::lower_bound(labels.begin(), labels.end(), label);
    if (it == labels.end() || *it != label)
        throw InputError("unknown label " + std::to_string(label));
    return static_cast<int>(it - labels.begin());
}

Instance::Instance(GroundSet ground, MatroidSpec spec)
    : ground_(std::move(ground)), spec_(std::move(spec)) {
    validate();
}

void Instance::validate() {
    if (ground_.dimension < 1) throw InputError("instance: dimension must be >= 1");
    if (ground_.labels.size() != ground_.points.size())
        throw InputError("instance: labels and points must be parallel");
    if (ground_.labels.empty()) throw InputError("instance: empty ground set");

    // Normalize to strictly increasing labels.
    std::vector<std::size_t> order(ground_.labels.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return ground_.labels[a] < ground_.labels[b]; });
    GroundSet g;
    g.dimension = ground_.dimension;
    for (std::size_t i : order) {
        g.labels.push_back(ground_.labels[i]);
        g.points.push_back(ground_.points[i]);
    }
    for (std::size_t i = 1; i < g.labels.size(); ++i)
        if (g.labels[i] == g.labels[i - 1])
            throw InputError("instance: duplicate label " + std::to_string(g.labels[i]));
    for (const auto& p : g.points)
        if (p.dim() != g.dimension) throw InputError("instance: point dimension mismatch");
    ground_ = std::move(g);

    const int n = ground_.size();
    if (auto* part = std::get_if<PartitionSpec>(&spec_)) {
        if (part->classes.empty()) throw InputError("partition matroid: no classes");
        classOf_.assign(static_cast<std::size_t>(n), -1);
        for (std::size_t ci = 0; ci < part->classes.size(); ++ci) {
            auto& cls = part->classes[ci];
            if (cls.empty()) throw InputError("partition matroid: empty class (loop)");
            std::sort(cls.begin(), cls.end());
            for (int label : cls) {
                const int idx = ground_.indexOf(label);
                if (classOf_[static_cast<std::size_t>(idx)] != -1)
                    throw InputError("partition matroid: label in two classes");
                classOf_[static_cast<std::size_t>(idx)] = static_cast<int>(ci);
            }
        }
        for (int idx = 0; idx < n; ++idx)
            if (classOf_[static_cast<std::size_t>(idx)] == -1)
                throw InputError("partition matroid: label in no class");
        rank_ = static_cast<int>(part->classes.size());
    } else if (auto* uni = std::get_if<UniformSpec>(&spec_)) {
        if (uni->rank < 1 || uni->rank > n)
            throw InputError("uniform matroid: rank out of range");
        rank_ = uni->rank;
    } else {
        auto& ex = std::get<ExplicitBasesSpec>(spec_);
        if (ex.bases.empty()) throw InputError("explicit matroid: no bases");
        explicitSorted_.clear();
        for (const auto& b : ex.bases) {
            auto s = sortedUnique(b);
            if (s.size() != b.size()) throw InputError("explicit matroid: repeated label in a basis");
            explicitSorted_.push_back(std::move(s));
        }
        std::sort(explicitSorted_.begin(), explicitSorted_.end());
        explicitSorted_.erase(std::unique(explicitSorted_.begin(), explicitSorted_.end()),
                              explicitSorted_.end());
        const std::size_t r = explicitSorted_[0].size();
        if (r == 0) throw InputError("explicit matroid: empty basis");
        for (const auto& b : explicitSorted_) {
            if (b.size() != r) throw InputError("explicit matroid: bases of unequal size");
            for (int label : b) ground_.indexOf(label);
        }
        rank_ = static_cast<int>(r);

        // Looplessness: every ground element must appear in some basis.
        std::set<int> covered;
        for (const auto& b : explicitSorted_) covered.insert(b.begin(), b.end());
        if (static_cast<int>(covered.size()) != n)
            throw InputError("explicit matroid: some label is a loop (in no basis)");

        // Basis exchange axiom, brute force over all pairs.
        std::set<std::vector<int>> lookup(explicitSorted_.begin(), explicitSorted_.end());
        for (const auto& b1 : explicitSorted_) {
            for (const auto& b2 : explicitSorted_) {
                if (b1 == b2) continue;
                for (int x : b1) {
                    if (std::binary_search(b2.begin(), b2.end(), x)) continue;
                    bool ok = false;
                    for (int y : b2) {
                        if (std::binary_search(b1.begin(), b1.end(), y)) continue;
                        std::vector<int> cand;
                        cand.reserve(r);
                        for (int e : b1)
                            if (e != x) cand.push_back(e);
                        cand.push_back(y);
                        std::sort(cand.begin(), cand.end());
                        if (lookup.count(cand)) { ok = true; break; }
                    }
                    if (!ok)
                        throw InputError("explicit matroid: basis exchange axiom fails");
                }
            }
        }

        basesContaining_.assign(static_cast<std::size_t>(n),
                                std::vector<std::uint64_t>(explicitSorted_.size() / 64 + 1, 0));
        for (std::size_t bi = 0; bi < explicitSorted_.size(); ++bi)
            for (int label : explicitSorted_[bi]) {
                const auto idx = static_cast<std::size_t>(ground_.indexOf(label));
                basesContaining_[idx][bi / 64] |= (std::uint64_t{1} << (bi % 64));
            }
    }
    if (rank_ < 1) throw InputError("instance: rank must be >= 1");
}

int Instance::classCount() const {
    if (!isPartition()) throw InputError("classCount: not a partition instance");
    return static_cast<int>(std::get<PartitionSpec>(spec_).classes.size());
}

const std::vector<std::vector<int>>& Instance::classes() const {
    if (!isPartition()) throw InputError("classes: not a partition instance");
    return std::get<PartitionSpec>(spec_).classes;
}

int Instance::classOf(int label) const {
    if (!isPartition()) throw InputError("classOf: not a partition instance");
    return classOf_[static_cast<std::size_t>(ground_.indexOf(label))];
}

int Instance::rankOf(std::span<const int> labels) const {
    const auto s = sortedUnique(labels);
    for (int l : s) ground_.indexOf(l);  // validates
    if (isPartition()) {
        std::set<int> seen;
        for (int l : s) seen.insert(classOf_[static_cast<std::size_t>(ground_.indexOf(l))]);
        return static_cast<int>(seen.size());
    }
    if (std::holds_alternative<UniformSpec>(spec_))
        return std::min(static_cast<int>(s.size()), rank_);

    int best = 0;
    for (const auto& b : explicitSorted_) {
        int c = 0;
        for (int l : b)
            if (std::binary_search(s.begin(), s.end(), l)) ++c;
        best = std::max(best, c);
    }
    return best;
}

bool Instance::isIndependent(std::span<const int> labels) const {
    const auto s = sortedUnique(labels);
    return rankOf(s) == static_cast<int>(s.size());
}

int Instance::augment(std::span<const int> A, std::span<const int> B) const {
    const auto a = sortedUnique(A);
    const auto b = sortedUnique(B);
    if (!isIndependent(a) || !isIndependent(b) || a.size() >= b.size())
        throw InputError("augment: requires independent A, B with |A| < |B|");
    for (int candidate : b) {
        if (std::binary_search(a.begin(), a.end(), candidate)) continue;
        std::vector<int> ext = a;
        ext.push_back(candidate);
        if (isIndependent(ext)) return candidate;
    }
    throw InternalInconsistencyError("augment: no augmenting element (matroid axiom violated)");
}

bool Instance::extendsIndependent(const std::vector<int>& sortedSet, int label) const {
    std::vector<int> ext = sortedSet;
    ext.push_back(label);
    return isIndependent(ext);
}

void Instance::forEachIndependent(
    int maxSize, const std::function<bool(const std::vector<int>&)>& visit) const {
    if (maxSize < 0) throw InputError("forEachIndependent: negative maxSize");
    maxSize = std::min(maxSize, rank_);
    const int n = ground_.size();

    // Incremental per-kind state avoids a rank query per extension.
    std::vector<char> usedClass;
    if (isPartition()) usedClass.assign(static_cast<std::size_t>(classCount()), 0);
    const bool isExplicit = std::holds_alternative<ExplicitBasesSpec>(spec_);
    std::vector<std::vector<std::uint64_t>> maskStack;
    if (isExplicit) {
        maskStack.emplace_back(explicitSorted_.size() / 64 + 1,
                               ~std::uint64_t{0});
    }

    std::vector<int> current;
    bool stopped = false;

    auto dfs = [&](auto&& self, int from) -> void {
        if (stopped) return;
        if (!visit(current)) { stopped = true; return; }
        if (static_cast<int>(current.size()) == maxSize) return;
        for (int idx = from; idx < n && !stopped; ++idx) {
            const int label = ground_.labels[static_cast<std::size_t>(idx)];
            if (isPartition()) {
                const int cls = classOf_[static_cast<std::size_t>(idx)];
                if (usedClass[static_cast<std::size_t>(cls)]) continue;
                usedClass[static_cast<std::size_t>(cls)] = 1;
                current.push_back(label);
                self(self, idx + 1);
                current.pop_back();
                usedClass[static_cast<std::size_t>(cls)] = 0;
            } else if (isExplicit) {
                const auto& top = maskStack.back();
                std::vector<std::uint64_t> next(top.size());
                for (std::size_t w = 0; w < top.size(); ++w)
                    next[w] = top[w] & basesContaining_[static_cast<std::size_t>(idx)][w];
                if (!anyWord(next)) continue;
                maskStack.push_back(std::move(next));
                current.push_back(label);
                self(self, idx + 1);
                current.pop_back();
                maskStack.pop_back();
            } else {
                // Uniform: any set up to the rank bound is independent.
                current.push_back(label);
                self(self, idx + 1);
                current.pop_back();
            }
        }
    };
    dfs(dfs, 0);
}

std::vector<std::vector<int>> Instance::independentSets(int maxSize) const {
    std::vector<std::vector<int>> out;
    forEachIndependent(maxSize, [&](const std::vector<int>& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

const std::vector<std::vector<int>>& Instance::bases(long long cap) const {
    if (basesCached_) return basesCache_;
    std::vector<std::vector<int>> result;
    forEachIndependent(rank_, [&](const std::vector<int>& s) {
        if (static_cast<int>(s.size()) == rank_) {
            if (static_cast<long long>(result.size()) >= cap)
                throw BudgetExceeded("basis enumeration exceeded cap");
            result.push_back(s);
        }
        return true;
    });
    basesCache_ = std::move(result);
    basesCached_ = true;
    return basesCache_;
}

std::vector<QPoint> Instance::pointsOf(std::span<const int> labels) const {
    std::vector<QPoint> pts;
    pts.reserve(labels.size());
    for (int l : labels) pts.push_back(ground_.pointOf(l));
    return pts;
}

}  // namespace geomjoin
