#include "geomjoin/lp.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <cstdint>
#include <limits>
#include <type_traits>

#include "geomjoin/errors.hpp"

namespace geomjoin {

namespace {

std::atomic<long long> g_solves{0};
std::atomic<long long> g_pivots{0};
std::atomic<long long> g_bigFallbacks{0};

// Signals that an int64 tableau entry left the safe range; the solve is
// restarted with arbitrary-precision entries (identical pivot sequence).
struct Overflow {};

constexpr std::int64_t kSafe = (std::int64_t{1} << 61);

struct Int64Traits {
    using Value = std::int64_t;

    static int sgn(Value v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

    static Value pivotCell(Value aij, Value p, Value aic, Value arj, Value d) {
        const __int128 num = static_cast<__int128>(aij) * p - static_cast<__int128>(aic) * arj;
        const __int128 q = num / d;
        if (q * d != num)
            throw InternalInconsistencyError("simplex: fraction-free pivot did not divide exactly");
        if (q > kSafe || q < -kSafe) throw Overflow{};
        return static_cast<Value>(q);
    }

    // a1/b1 < a2/b2 given sign(b1) == sign(b2) != 0.
    static bool ratioLess(Value a1, Value b1, Value a2, Value b2) {
        return static_cast<__int128>(a1) * b2 < static_cast<__int128>(a2) * b1;
    }

    static Rat toRat(Value num, Value den) { return Rat(BigInt(num), BigInt(den)); }
};

struct BigTraits {
    using Value = BigInt;

    static int sgn(const Value& v) { return v.sign(); }

    static Value pivotCell(const Value& aij, const Value& p, const Value& aic, const Value& arj,
                           const Value& d) {
        Value num = aij * p - aic * arj;
#ifndef NDEBUG
        assert(num % d == 0 && "fraction-free pivot must divide exactly");
#endif
        return num / d;
    }

    static bool ratioLess(const Value& a1, const Value& b1, const Value& a2, const Value& b2) {
        return a1 * b2 < a2 * b1;
    }

    static Rat toRat(const Value& num, const Value& den) { return Rat(num, den); }
};

// One constraint row in integer-scaled standard form.
struct StdRow {
    std::vector<BigInt> coeffs;  // dense over tableau structural columns
    BigInt rhs;
    int sigma = 1;       // -1 when the equality row was negated to get rhs >= 0
    int slackCoef = 0;   // coefficient of the slack column after flipping, 0 for Eq
    int slackCol = -1;   // tableau column of the slack, -1 if none
    int artCol = -1;     // tableau column of the artificial, -1 if none
};

struct Prepared {
    int structCols = 0;
    int totalCols = 0;                 // structural + slack + artificial
    std::vector<int> primaryCol;       // user var -> column
    std::vector<int> negatedCol;       // user var -> column of the negative part, -1 if NonNeg
    std::vector<StdRow> rows;
    bool fitsInt64 = true;
};

Prepared prepare(const std::vector<VarKind>& kinds,
                 const std::vector<std::vector<std::pair<int, Rat>>>& terms,
                 const std::vector<Rel>& rels, const std::vector<Rat>& rhss) {
    Prepared prep;
    const int nvars = static_cast<int>(kinds.size());
    prep.primaryCol.resize(static_cast<std::size_t>(nvars));
    prep.negatedCol.assign(static_cast<std::size_t>(nvars), -1);
    for (int v = 0; v < nvars; ++v) {
        prep.primaryCol[static_cast<std::size_t>(v)] = prep.structCols++;
        if (kinds[static_cast<std::size_t>(v)] == VarKind::Free)
            prep.negatedCol[static_cast<std::size_t>(v)] = prep.structCols++;
    }

    int nextCol = prep.structCols;
    prep.rows.reserve(rels.size());
    for (std::size_t k = 0; k < rels.size(); ++k) {
        StdRow row;
        row.coeffs.assign(static_cast<std::size_t>(prep.structCols), BigInt(0));

        // Scale the row to integers by the lcm of all denominators.
        BigInt scale = 1;
        for (const auto& [v, c] : terms[k]) scale = lcm(scale, denominator(c));
        scale = lcm(scale, denominator(rhss[k]));
        for (const auto& [v, c] : terms[k]) {
            BigInt ic = numerator(c) * (scale / denominator(c));
            auto vi = static_cast<std::size_t>(v);
            row.coeffs[static_cast<std::size_t>(prep.primaryCol[vi])] += ic;
            if (prep.negatedCol[vi] >= 0)
                row.coeffs[static_cast<std::size_t>(prep.negatedCol[vi])] -= ic;
        }
        row.rhs = numerator(rhss[k]) * (scale / denominator(rhss[k]));

        switch (rels[k]) {
            case Rel::Ge: row.slackCoef = -1; break;
            case Rel::Le: row.slackCoef = +1; break;
            case Rel::Eq: row.slackCoef = 0; break;
        }
        if (row.rhs < 0) {
            row.sigma = -1;
            for (auto& c : row.coeffs) c = -c;
            row.rhs = -row.rhs;
            row.slackCoef = -row.slackCoef;
        }
        if (row.slackCoef != 0) row.slackCol = nextCol++;
        prep.rows.push_back(std::move(row));
    }
    for (auto& row : prep.rows) {
        // A +1 slack can start basic; otherwise the row needs an artificial.
        if (row.slackCoef != 1) row.artCol = nextCol++;
    }
    prep.totalCols = nextCol;

    for (const auto& row : prep.rows) {
        for (const auto& c : row.coeffs)
            if (abs(c) > kSafe) prep.fitsInt64 = false;
        if (abs(row.rhs) > kSafe) prep.fitsInt64 = false;
    }
    return prep;
}

enum class SolveStatus { Feasible, Infeasible };

struct RawResult {
    SolveStatus status = SolveStatus::Infeasible;
    std::vector<Rat> columnValues;  // per structural column, when feasible
    std::vector<Rat> rowMultipliers;  // per row (standard-form y), when infeasible
    Rat objective;                  // phase II optimum, when requested
};

template <typename Traits>
class Tableau {
  public:
    using Value = typename Traits::Value;

    Tableau(const Prepared& prep, long long* pivotCounter)
        : prep_(prep), pivots_(pivotCounter) {
        m_ = static_cast<int>(prep.rows.size());
        cols_ = prep.totalCols;
        rhsCol_ = cols_;
        width_ = cols_ + 1;
        cells_.assign(static_cast<std::size_t>((m_ + 1) * width_), Value(0));
        basis_.assign(static_cast<std::size_t>(m_), -1);
        banned_.assign(static_cast<std::size_t>(cols_), false);
        deadRow_.assign(static_cast<std::size_t>(m_), false);
        d_ = Value(1);

        for (int i = 0; i < m_; ++i) {
            const StdRow& row = prep.rows[static_cast<std::size_t>(i)];
            for (int j = 0; j < prep.structCols; ++j)
                at(i, j) = fromBig(row.coeffs[static_cast<std::size_t>(j)]);
            if (row.slackCol >= 0) at(i, row.slackCol) = Value(row.slackCoef);
            if (row.artCol >= 0) {
                at(i, row.artCol) = Value(1);
                banned_[static_cast<std::size_t>(row.artCol)] = true;
                basis_[static_cast<std::size_t>(i)] = row.artCol;
            } else {
                basis_[static_cast<std::size_t>(i)] = row.slackCol;
            }
            at(i, rhsCol_) = fromBig(row.rhs);
        }
        // Phase I objective: minimize the sum of artificial variables.
        // objRow stores D * reduced costs; objRow[rhs] stores -D * objective.
        for (int i = 0; i < m_; ++i) {
            if (prep.rows[static_cast<std::size_t>(i)].artCol < 0) continue;
            for (int j = 0; j < width_; ++j)
                if (j != prep.rows[static_cast<std::size_t>(i)].artCol) at(m_, j) -= at(i, j);
        }
    }

    bool runPhase1() {
        blandLoop();
        // Objective value is -objRow[rhs]/D; feasible iff it is zero.
        return Traits::sgn(at(m_, rhsCol_)) == 0;
    }

    void pivotOutArtificials() {
        for (int i = 0; i < m_; ++i) {
            const int b = basis_[static_cast<std::size_t>(i)];
            if (!isArtificial(b)) continue;
            assert(Traits::sgn(at(i, rhsCol_)) == 0);
            int enter = -1;
            for (int j = 0; j < cols_; ++j) {
                if (banned_[static_cast<std::size_t>(j)]) continue;
                if (Traits::sgn(at(i, j)) != 0) { enter = j; break; }
            }
            if (enter < 0) {
                deadRow_[static_cast<std::size_t>(i)] = true;  // redundant constraint
                continue;
            }
            pivot(i, enter);
        }
    }

    // Installs the objective "minimize sum(colCost[j] * x_j)" and optimizes.
    void runPhase2(const std::vector<int>& colCost) {
        for (int j = 0; j < width_; ++j) at(m_, j) = Value(0);
        for (int j = 0; j < cols_; ++j)
            at(m_, j) = mulScalar(d_, colCost[static_cast<std::size_t>(j)]);
        for (int i = 0; i < m_; ++i) {
            const int c = colCost[static_cast<std::size_t>(basis_[static_cast<std::size_t>(i)])];
            if (c == 0) continue;
            for (int j = 0; j < width_; ++j) at(m_, j) -= mulScalar(at(i, j), c);
        }
        blandLoop();
    }

    Rat objectiveValue() const { return -Traits::toRat(at(m_, rhsCol_), d_); }

    std::vector<Rat> columnValues() const {
        std::vector<Rat> vals(static_cast<std::size_t>(cols_), Rat(0));
        for (int i = 0; i < m_; ++i)
            vals[static_cast<std::size_t>(basis_[static_cast<std::size_t>(i)])] =
                Traits::toRat(at(i, rhsCol_), d_);
        return vals;
    }

    // Standard-form row multipliers y at phase I optimality.
    std::vector<Rat> rowMultipliers() const {
        std::vector<Rat> y(static_cast<std::size_t>(m_));
        for (int i = 0; i < m_; ++i) {
            const StdRow& row = prep_.rows[static_cast<std::size_t>(i)];
            if (row.artCol >= 0) {
                y[static_cast<std::size_t>(i)] = Rat(1) - Traits::toRat(at(m_, row.artCol), d_);
            } else {
                // slackCoef is +1 here by construction
                y[static_cast<std::size_t>(i)] = -Traits::toRat(at(m_, row.slackCol), d_);
            }
        }
        return y;
    }

  private:
    Value& at(int i, int j) { return cells_[static_cast<std::size_t>(i * width_ + j)]; }
    const Value& at(int i, int j) const { return cells_[static_cast<std::size_t>(i * width_ + j)]; }

    bool isArtificial(int col) const {
        return col >= 0 && banned_[static_cast<std::size_t>(col)];
    }

    static Value fromBig(const BigInt& z) {
        if constexpr (std::is_same_v<Value, BigInt>) {
            return z;
        } else {
            if (abs(z) > kSafe) throw Overflow{};
            return z.convert_to<std::int64_t>();
        }
    }

    static Value mulScalar(const Value& v, int s) {
        if constexpr (std::is_same_v<Value, BigInt>) {
            return v * s;
        } else {
            const __int128 r = static_cast<__int128>(v) * s;
            if (r > kSafe || r < -kSafe) throw Overflow{};
            return static_cast<Value>(r);
        }
    }

    int trueSign(const Value& v) const { return Traits::sgn(v) * dSign_; }

    void blandLoop() {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < cols_; ++j) {
                if (banned_[static_cast<std::size_t>(j)]) continue;
                if (trueSign(at(m_, j)) < 0) { enter = j; break; }
            }
            if (enter < 0) return;

            int leave = -1;
            for (int i = 0; i < m_; ++i) {
                if (deadRow_[static_cast<std::size_t>(i)]) continue;
                if (trueSign(at(i, enter)) <= 0) continue;
                if (leave < 0) { leave = i; continue; }
                // Compare b_i / a_ie against the incumbent exactly.
                if (Traits::ratioLess(at(i, rhsCol_), at(i, enter),
                                      at(leave, rhsCol_), at(leave, enter))) {
                    leave = i;
                } else if (!Traits::ratioLess(at(leave, rhsCol_), at(leave, enter),
                                              at(i, rhsCol_), at(i, enter))) {
                    // Exact tie: Bland's anti-cycling tie-break.
                    if (basis_[static_cast<std::size_t>(i)] < basis_[static_cast<std::size_t>(leave)])
                        leave = i;
                }
            }
            if (leave < 0)
                throw InternalInconsistencyError(
                    "simplex: unbounded objective in a problem posed as bounded");
            pivot(leave, enter);
        }
    }

    void pivot(int r, int c) {
        if (pivots_) ++*pivots_;
        if (++pivotCount_ > kPivotCap)
            throw InternalInconsistencyError("simplex: pivot cap exceeded (cycling?)");
        const Value p = at(r, c);
        assert(Traits::sgn(p) != 0);
        for (int i = 0; i <= m_; ++i) {
            if (i == r) continue;
            const Value aic = at(i, c);
            if (Traits::sgn(aic) == 0) {
                // The whole tableau rescales by p/D, including untouched rows.
                for (int j = 0; j < width_; ++j) {
                    if (j == c) continue;
                    at(i, j) = Traits::pivotCell(at(i, j), p, Value(0), Value(0), d_);
                }
            } else {
                for (int j = 0; j < width_; ++j) {
                    if (j == c) continue;
                    at(i, j) = Traits::pivotCell(at(i, j), p, aic, at(r, j), d_);
                }
            }
            at(i, c) = Value(0);
        }
        at(r, c) = p;
        basis_[static_cast<std::size_t>(r)] = c;
        d_ = p;
        dSign_ = Traits::sgn(p);
    }

    const Prepared& prep_;
    long long* pivots_;
    int m_ = 0, cols_ = 0, rhsCol_ = 0, width_ = 0;
    std::vector<Value> cells_;
    std::vector<int> basis_;
    std::vector<bool> banned_;
    std::vector<bool> deadRow_;
    Value d_;
    int dSign_ = 1;
    long long pivotCount_ = 0;
    static constexpr long long kPivotCap = 2'000'000;
};

template <typename Traits>
RawResult runSolve(const Prepared& prep, const std::vector<int>& phase2Cost, bool wantPhase2) {
    long long pivots = 0;
    Tableau<Traits> tab(prep, &pivots);
    RawResult res;
    const bool feasible = tab.runPhase1();
    g_pivots.fetch_add(pivots, std::memory_order_relaxed);
    if (!feasible) {
        res.status = SolveStatus::Infeasible;
        res.rowMultipliers = tab.rowMultipliers();
        return res;
    }
    res.status = SolveStatus::Feasible;
    if (wantPhase2) {
        tab.pivotOutArtificials();
        tab.runPhase2(phase2Cost);
        res.objective = tab.objectiveValue();
    }
    res.columnValues = tab.columnValues();
    return res;
}

RawResult solvePrepared(const Prepared& prep, const std::vector<int>& phase2Cost, bool wantPhase2) {
    g_solves.fetch_add(1, std::memory_order_relaxed);
    if (prep.fitsInt64) {
        try {
            return runSolve<Int64Traits>(prep, phase2Cost, wantPhase2);
        } catch (const Overflow&) {
            g_bigFallbacks.fetch_add(1, std::memory_order_relaxed);
        }
    }
    return runSolve<BigTraits>(prep, phase2Cost, wantPhase2);
}

}  // namespace

int LinearSystem::addVariable(VarKind kind, std::string name) {
    kinds_.push_back(kind);
    names_.push_back(std::move(name));
    return static_cast<int>(kinds_.size()) - 1;
}

int LinearSystem::addVariables(int n, VarKind kind) {
    const int first = variableCount();
    for (int i = 0; i < n; ++i) addVariable(kind);
    return first;
}

void LinearSystem::addConstraint(const std::vector<std::pair<int, Rat>>& terms, Rel rel, Rat rhs) {
    for (const auto& [v, c] : terms)
        if (v < 0 || v >= variableCount())
            throw InputError("lp: constraint references unknown variable");
    rows_.push_back(Constraint{terms, rel, std::move(rhs)});
}

LPOutcome LinearSystem::solveFeasibility() const {
    std::vector<std::vector<std::pair<int, Rat>>> terms;
    std::vector<Rel> rels;
    std::vector<Rat> rhss;
    terms.reserve(rows_.size());
    for (const auto& r : rows_) {
        terms.push_back(r.terms);
        rels.push_back(r.rel);
        rhss.push_back(r.rhs);
    }
    Prepared prep = prepare(kinds_, terms, rels, rhss);
    RawResult raw = solvePrepared(prep, {}, false);

    LPOutcome out;
    if (raw.status == SolveStatus::Feasible) {
        out.feasible = true;
        out.witness.assign(static_cast<std::size_t>(variableCount()), Rat(0));
        for (int v = 0; v < variableCount(); ++v) {
            Rat val = raw.columnValues[static_cast<std::size_t>(prep.primaryCol[static_cast<std::size_t>(v)])];
            if (prep.negatedCol[static_cast<std::size_t>(v)] >= 0)
                val -= raw.columnValues[static_cast<std::size_t>(prep.negatedCol[static_cast<std::size_t>(v)])];
            out.witness[static_cast<std::size_t>(v)] = std::move(val);
        }
#ifndef NDEBUG
        assert(checkWitness(out.witness));
#endif
    } else {
        out.feasible = false;
        out.farkas.resize(rows_.size());
        for (std::size_t k = 0; k < rows_.size(); ++k)
            out.farkas[k] = Rat(prep.rows[k].sigma) * raw.rowMultipliers[k];
#ifndef NDEBUG
        assert(checkFarkas(out.farkas));
#endif
    }
    return out;
}

OptResult LinearSystem::optimizeVariable(int var, bool maximize) const {
    if (var < 0 || var >= variableCount()) throw InputError("lp: unknown objective variable");
    std::vector<std::vector<std::pair<int, Rat>>> terms;
    std::vector<Rel> rels;
    std::vector<Rat> rhss;
    for (const auto& r : rows_) {
        terms.push_back(r.terms);
        rels.push_back(r.rel);
        rhss.push_back(r.rhs);
    }
    Prepared prep = prepare(kinds_, terms, rels, rhss);

    std::vector<int> cost(static_cast<std::size_t>(prep.totalCols), 0);
    const int sign = maximize ? -1 : +1;
    cost[static_cast<std::size_t>(prep.primaryCol[static_cast<std::size_t>(var)])] = sign;
    if (prep.negatedCol[static_cast<std::size_t>(var)] >= 0)
        cost[static_cast<std::size_t>(prep.negatedCol[static_cast<std::size_t>(var)])] = -sign;

    RawResult raw = solvePrepared(prep, cost, true);
    OptResult res;
    if (raw.status == SolveStatus::Infeasible) return res;
    res.feasible = true;
    res.value = maximize ? -raw.objective : raw.objective;
    res.witness.assign(static_cast<std::size_t>(variableCount()), Rat(0));
    for (int v = 0; v < variableCount(); ++v) {
        Rat val = raw.columnValues[static_cast<std::size_t>(prep.primaryCol[static_cast<std::size_t>(v)])];
        if (prep.negatedCol[static_cast<std::size_t>(v)] >= 0)
            val -= raw.columnValues[static_cast<std::size_t>(prep.negatedCol[static_cast<std::size_t>(v)])];
        res.witness[static_cast<std::size_t>(v)] = std::move(val);
    }
#ifndef NDEBUG
    assert(checkWitness(res.witness));
#endif
    return res;
}

bool LinearSystem::checkWitness(const std::vector<Rat>& witness) const {
    if (witness.size() != static_cast<std::size_t>(variableCount())) return false;
    for (int v = 0; v < variableCount(); ++v)
        if (kind(v) == VarKind::NonNeg && witness[static_cast<std::size_t>(v)] < 0) return false;
    for (const auto& row : rows_) {
        Rat lhs = 0;
        for (const auto& [v, c] : row.terms) lhs += c * witness[static_cast<std::size_t>(v)];
        switch (row.rel) {
            case Rel::Le: if (!(lhs <= row.rhs)) return false; break;
            case Rel::Ge: if (!(lhs >= row.rhs)) return false; break;
            case Rel::Eq: if (!(lhs == row.rhs)) return false; break;
        }
    }
    return true;
}

bool LinearSystem::checkFarkas(const std::vector<Rat>& farkas) const {
    if (farkas.size() != rows_.size()) return false;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        if (rows_[k].rel == Rel::Ge && farkas[k] < 0) return false;
        if (rows_[k].rel == Rel::Le && farkas[k] > 0) return false;
    }
    std::vector<Rat> combo(static_cast<std::size_t>(variableCount()), Rat(0));
    Rat rhs = 0;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        if (farkas[k] == 0) continue;
        for (const auto& [v, c] : rows_[k].terms) combo[static_cast<std::size_t>(v)] += farkas[k] * c;
        rhs += farkas[k] * rows_[k].rhs;
    }
    for (int v = 0; v < variableCount(); ++v) {
        const Rat& z = combo[static_cast<std::size_t>(v)];
        if (kind(v) == VarKind::Free && z != 0) return false;
        if (kind(v) == VarKind::NonNeg && z > 0) return false;
    }
    return rhs > 0;
}

LpCounters lpCounters() {
    LpCounters c;
    c.solves = g_solves.load(std::memory_order_relaxed);
    c.pivots = g_pivots.load(std::memory_order_relaxed);
    c.bigFallbacks = g_bigFallbacks.load(std::memory_order_relaxed);
    return c;
}

void resetLpCounters() {
    g_solves = 0;
    g_pivots = 0;
    g_bigFallbacks = 0;
}

}  // namespace geomjoin
