#include "geomjoin/homology.hpp"

#include <algorithm>
#include <deque>
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

// Column operation col_j -= f * col_c, sorted-merge; returns the new column.
std::vector<std::pair<int, BigInt>> axpyColumn(const std::vector<std::pair<int, BigInt>>& colJ,
                                               const BigInt& f,
                                               const std::vector<std::pair<int, BigInt>>& colC) {
    std::vector<std::pair<int, BigInt>> out;
    out.reserve(colJ.size() + colC.size());
    std::size_t a = 0, b = 0;
    while (a < colJ.size() || b < colC.size()) {
        if (b == colC.size() || (a < colJ.size() && colJ[a].first < colC[b].first)) {
            out.push_back(colJ[a++]);
        } else if (a == colJ.size() || colC[b].first < colJ[a].first) {
            out.emplace_back(colC[b].first, -f * colC[b].second);
            ++b;
        } else {
            BigInt v = colJ[a].second - f * colC[b].second;
            if (v != 0) out.emplace_back(colJ[a].first, std::move(v));
            ++a;
            ++b;
        }
    }
    return out;
}

// Dense textbook Smith reduction with smallest-entry pivoting; the input is
// whatever the sparse unit-pivot phase could not clear.
std::vector<BigInt> denseSmith(std::vector<std::vector<BigInt>> m) {
    std::vector<BigInt> diag;
    std::size_t top = 0;
    const std::size_t R = m.size();
    const std::size_t C = R ? m[0].size() : 0;
    while (top < R && top < C) {
        // Find the nonzero entry of smallest absolute value.
        std::size_t pr = R, pc = C;
        BigInt best = 0;
        for (std::size_t i = top; i < R; ++i)
            for (std::size_t j = top; j < C; ++j) {
                if (m[i][j] == 0) continue;
                BigInt a = abs(m[i][j]);
                if (pr == R || a < best) { best = a; pr = i; pc = j; }
            }
        if (pr == R) break;
        std::swap(m[top], m[pr]);
        for (std::size_t i = 0; i < R; ++i) std::swap(m[i][top], m[i][pc]);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = top + 1; i < R; ++i) {
                if (m[i][top] == 0) continue;
                BigInt q = m[i][top] / m[top][top];
                if (q != 0)
                    for (std::size_t j = top; j < C; ++j) m[i][j] -= q * m[top][j];
                if (m[i][top] != 0) {
                    std::swap(m[top], m[i]);  // remainder is smaller: euclidean step
                    clean = false;
                }
            }
            for (std::size_t j = top + 1; j < C; ++j) {
                if (m[top][j] == 0) continue;
                BigInt q = m[top][j] / m[top][top];
                if (q != 0)
                    for (std::size_t i = top; i < R; ++i) m[i][j] -= q * m[i][top];
                if (m[top][j] != 0) {
                    for (std::size_t i = 0; i < R; ++i) std::swap(m[i][top], m[i][j]);
                    clean = false;
                }
            }
        }
        diag.push_back(abs(m[top][top]));
        ++top;
    }
    return diag;
}

}  // namespace

SmithSummary smithNormalForm(SparseIntMatrix matrix) {
    const int rows = matrix.rows;
    const int cols = matrix.cols;
    auto& columns = matrix.columns;

    std::vector<char> colAlive(static_cast<std::size_t>(cols), 1);
    std::vector<char> rowAlive(static_cast<std::size_t>(rows), 1);
    std::vector<int> rowNnz(static_cast<std::size_t>(rows), 0);
    std::vector<std::vector<int>> rowCols(static_cast<std::size_t>(rows));  // lazy, may hold stale ids
    for (int j = 0; j < cols; ++j)
        for (const auto& [r, v] : columns[static_cast<std::size_t>(j)]) {
            ++rowNnz[static_cast<std::size_t>(r)];
            rowCols[static_cast<std::size_t>(r)].push_back(j);
        }

    auto findInCol = [&](int j, int r) -> const BigInt* {
        const auto& col = columns[static_cast<std::size_t>(j)];
        auto it = std::lower_bound(col.begin(), col.end(), r,
                                   [](const auto& e, int row) { return e.first < row; });
        if (it == col.end() || it->first != r) return nullptr;
        return &it->second;
    };

    long long unitPivots = 0;
    std::deque<int> work;
    for (int j = 0; j < cols; ++j) work.push_back(j);

    while (!work.empty()) {
        const int c = work.front();
        work.pop_front();
        if (!colAlive[static_cast<std::size_t>(c)]) continue;
        auto& col = columns[static_cast<std::size_t>(c)];
        // Drop entries of dead rows lazily.
        col.erase(std::remove_if(col.begin(), col.end(),
                                 [&](const auto& e) { return !rowAlive[static_cast<std::size_t>(e.first)]; }),
                  col.end());
        if (col.empty()) continue;

        // Unit pivot with the sparsest row, for fill control.
        int pivotRow = -1;
        int pivotSign = 0;
        for (const auto& [r, v] : col) {
            if (v != 1 && v != -1) continue;
            if (pivotRow < 0 || rowNnz[static_cast<std::size_t>(r)] <
                                    rowNnz[static_cast<std::size_t>(pivotRow)]) {
                pivotRow = r;
                pivotSign = v > 0 ? 1 : -1;
            }
        }
        if (pivotRow < 0) continue;  // no unit entry; leave for the dense phase

        // Eliminate pivotRow from every other column that contains it.
        auto candidates = std::move(rowCols[static_cast<std::size_t>(pivotRow)]);
        rowCols[static_cast<std::size_t>(pivotRow)].clear();
        for (int j : candidates) {
            if (j == c || !colAlive[static_cast<std::size_t>(j)]) continue;
            const BigInt* vj = findInCol(j, pivotRow);
            if (vj == nullptr) continue;  // stale reference
            BigInt factor = *vj * pivotSign;
            auto merged = axpyColumn(columns[static_cast<std::size_t>(j)], factor, col);
            // Maintain row occupancy counts and lazy row->column lists.
            {
                const auto& oldCol = columns[static_cast<std::size_t>(j)];
                std::size_t a = 0, b = 0;
                while (a < oldCol.size() || b < merged.size()) {
                    if (b == merged.size() || (a < oldCol.size() && oldCol[a].first < merged[b].first)) {
                        --rowNnz[static_cast<std::size_t>(oldCol[a].first)];
                        ++a;
                    } else if (a == oldCol.size() || merged[b].first < oldCol[a].first) {
                        ++rowNnz[static_cast<std::size_t>(merged[b].first)];
                        rowCols[static_cast<std::size_t>(merged[b].first)].push_back(j);
                        ++b;
                    } else {
                        ++a;
                        ++b;
                    }
                }
            }
            columns[static_cast<std::size_t>(j)] = std::move(merged);
            work.push_back(j);
        }

        // Retire the pivot row and column.
        for (const auto& [r, v] : col) --rowNnz[static_cast<std::size_t>(r)];
        rowAlive[static_cast<std::size_t>(pivotRow)] = 0;
        colAlive[static_cast<std::size_t>(c)] = 0;
        col.clear();
        col.shrink_to_fit();
        ++unitPivots;
    }

    // Compact whatever survived into a dense residue.
    std::vector<int> rowMap(static_cast<std::size_t>(rows), -1);
    int liveRows = 0;
    std::vector<std::vector<BigInt>> dense;
    std::vector<int> liveCols;
    for (int j = 0; j < cols; ++j) {
        if (!colAlive[static_cast<std::size_t>(j)]) continue;
        auto& col = columns[static_cast<std::size_t>(j)];
        col.erase(std::remove_if(col.begin(), col.end(),
                                 [&](const auto& e) { return !rowAlive[static_cast<std::size_t>(e.first)]; }),
                  col.end());
        if (col.empty()) continue;
        liveCols.push_back(j);
        for (const auto& [r, v] : col)
            if (rowMap[static_cast<std::size_t>(r)] < 0) rowMap[static_cast<std::size_t>(r)] = liveRows++;
    }
    if (!liveCols.empty()) {
        dense.assign(static_cast<std::size_t>(liveRows),
                     std::vector<BigInt>(liveCols.size(), BigInt(0)));
        for (std::size_t jj = 0; jj < liveCols.size(); ++jj)
            for (const auto& [r, v] : columns[static_cast<std::size_t>(liveCols[jj])])
                dense[static_cast<std::size_t>(rowMap[static_cast<std::size_t>(r)])][jj] = v;
    }
    std::vector<BigInt> diag = denseSmith(std::move(dense));

    SmithSummary res;
    res.rank = unitPivots + static_cast<long long>(diag.size());
    res.invariantFactors.assign(static_cast<std::size_t>(unitPivots), BigInt(1));
    for (auto& d : diag) res.invariantFactors.push_back(std::move(d));

    // Normalize into a divisibility chain with repeated gcd/lcm passes.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < res.invariantFactors.size(); ++i) {
            BigInt&a = res.invariantFactors[i];
            for (std::size_t j = i + 1; j < res.invariantFactors.size(); ++j) {
                BigInt& b = res.invariantFactors[j];
                if (b % a == 0) continue;
                BigInt g = gcd(a, b);
                b = a / g * b;
                a = std::move(g);
                changed = true;
            }
        }
    }
    return res;
}

SparseIntMatrix boundaryMatrix(const SimplicialComplex& complex, int dim) {
    if (dim < 1 || dim > complex.dimensionCap)
        throw InputError("boundaryMatrix: dimension out of range");
    SparseIntMatrix m;
    m.rows = complex.faceCount(dim - 1);
    m.cols = complex.faceCount(dim);
    m.columns.resize(static_cast<std::size_t>(m.cols));
    if (m.cols == 0) return m;

    std::unordered_map<Face, int, FaceHash> rowIndex;
    rowIndex.reserve(static_cast<std::size_t>(m.rows) * 2);
    const auto& rowsFaces = complex.facesByDim[static_cast<std::size_t>(dim - 1)];
    for (int i = 0; i < m.rows; ++i) rowIndex.emplace(rowsFaces[static_cast<std::size_t>(i)], i);

    const auto& colFaces = complex.facesByDim[static_cast<std::size_t>(dim)];
    Face sub;
    for (int j = 0; j < m.cols; ++j) {
        const Face& f = colFaces[static_cast<std::size_t>(j)];
        auto& col = m.columns[static_cast<std::size_t>(j)];
        int sign = 1;
        for (std::size_t drop = 0; drop < f.size(); ++drop) {
            sub.clear();
            for (std::size_t i = 0; i < f.size(); ++i)
                if (i != drop) sub.push_back(f[i]);
            auto it = rowIndex.find(sub);
            if (it == rowIndex.end())
                throw InternalInconsistencyError("boundaryMatrix: complex not downward closed");
            col.emplace_back(it->second, BigInt(sign));
            sign = -sign;
        }
        std::sort(col.begin(), col.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    return m;
}

long long HomologyReport::bettiAt(int dim) const {
    if (dim < 0 || dim > maxDim())
        throw InputError("homology: dimension at or above the cap was requested");
    return betti[static_cast<std::size_t>(dim)];
}

bool HomologyReport::allZero() const {
    for (long long b : betti)
        if (b != 0) return false;
    for (const auto& t : torsion)
        if (!t.empty()) return false;
    return true;
}

HomologyReport homology(const SimplicialComplex& complex, bool reduced) {
    const int cap = complex.dimensionCap;
    HomologyReport rep;
    rep.reduced = reduced;
    if (cap < 0) return rep;
    rep.betti.assign(static_cast<std::size_t>(cap), 0);
    rep.torsion.assign(static_cast<std::size_t>(cap), {});
    if (complex.faceCount(0) == 0) return rep;

    // ranks[k] = rank of the boundary operator from dimension k.
    std::vector<long long> ranks(static_cast<std::size_t>(cap) + 2, 0);
    std::vector<std::vector<BigInt>> factors(static_cast<std::size_t>(cap) + 2);
    for (int k = 1; k <= cap; ++k) {
        if (complex.faceCount(k) == 0) continue;
        SmithSummary s = smithNormalForm(boundaryMatrix(complex, k));
        ranks[static_cast<std::size_t>(k)] = s.rank;
        factors[static_cast<std::size_t>(k)] = std::move(s.invariantFactors);
    }

    for (int k = 0; k < cap; ++k) {
        const long long fk = complex.faceCount(k);
        rep.betti[static_cast<std::size_t>(k)] =
            fk - ranks[static_cast<std::size_t>(k)] - ranks[static_cast<std::size_t>(k) + 1];
        if (rep.betti[static_cast<std::size_t>(k)] < 0)
            throw InternalInconsistencyError("homology: negative Betti number (rank audit failed)");
        for (const auto& f : factors[static_cast<std::size_t>(k) + 1])
            if (f > 1) rep.torsion[static_cast<std::size_t>(k)].push_back(f);
    }

    // Euler audit against the truncated top dimension.
    long long chiFaces = 0;
    for (int k = 0; k <= cap; ++k)
        chiFaces += (k % 2 ? -1 : 1) * static_cast<long long>(complex.faceCount(k));
    long long chiBetti = 0;
    for (int k = 0; k < cap; ++k)
        chiBetti += (k % 2 ? -1 : 1) * rep.betti[static_cast<std::size_t>(k)];
    const long long topTrunc =
        static_cast<long long>(complex.faceCount(cap)) - ranks[static_cast<std::size_t>(cap)];
    if (topTrunc < 0)
        throw InternalInconsistencyError("homology: boundary rank exceeds face count");
    chiBetti += (cap % 2 ? -1 : 1) * topTrunc;
    if (chiFaces != chiBetti)
        throw InternalInconsistencyError("homology: Euler characteristic audit failed");

    if (reduced && !rep.betti.empty() && complex.faceCount(0) > 0) rep.betti[0] -= 1;
    return rep;
}

}  // namespace geomjoin
