#ifndef GEOMJOIN_LP_HPP
#define GEOMJOIN_LP_HPP

#include <string>
#include <utility>
#include <vector>

#include "geomjoin/rational.hpp"

namespace geomjoin {

enum class Rel { Le, Eq, Ge };
enum class VarKind { NonNeg, Free };

/**
 * Outcome of an exact feasibility solve.  Exactly one of witness/farkas is
 * meaningful.  A witness satisfies every constraint exactly.  A Farkas
 * certificate is one multiplier per constraint with
 *
 *   gamma_i >= 0 for Ge rows, gamma_i <= 0 for Le rows, free for Eq rows,
 *   (gamma^T A)_j == 0 for free variables, <= 0 for nonnegative variables,
 *   gamma^T b > 0,
 *
 * which substitutes to the contradiction 0 >= gamma^T b > 0.
 */
struct LPOutcome {
    bool feasible = false;
    std::vector<Rat> witness;
    std::vector<Rat> farkas;
};

struct OptResult {
    bool feasible = false;
    Rat value;
    std::vector<Rat> witness;
};

/**
 * An exact linear feasibility system over declared variables.
 *
 * The solver is a primal simplex, phase I only (plus single-variable
 * phase II for segment parameters), with Bland's pivot rule over a fixed
 * lexicographic variable order, so every answer is deterministic.  The
 * tableau is kept integral by fraction-free (Edmonds) pivoting; entries are
 * machine words with a checked escalation to arbitrary precision.
 */
class LinearSystem {
  public:
    int addVariable(VarKind kind, std::string name = {});
    /** Adds n variables of one kind, returns the id of the first. */
    int addVariables(int n, VarKind kind);

    void addConstraint(const std::vector<std::pair<int, Rat>>& terms, Rel rel, Rat rhs);

    int variableCount() const { return static_cast<int>(kinds_.size()); }
    int constraintCount() const { return static_cast<int>(rows_.size()); }
    VarKind kind(int var) const { return kinds_[static_cast<std::size_t>(var)]; }
    const std::string& variableName(int var) const { return names_[static_cast<std::size_t>(var)]; }

    LPOutcome solveFeasibility() const;

    /** Minimize or maximize one variable; callers must pose bounded problems. */
    OptResult optimizeVariable(int var, bool maximize) const;

    bool checkWitness(const std::vector<Rat>& witness) const;
    bool checkFarkas(const std::vector<Rat>& farkas) const;

  private:
    struct Constraint {
        std::vector<std::pair<int, Rat>> terms;  // (variable, coefficient)
        Rel rel;
        Rat rhs;
    };

    std::vector<VarKind> kinds_;
    std::vector<std::string> names_;
    std::vector<Constraint> rows_;

    friend class SimplexDriver;
};

struct LpCounters {
    long long solves = 0;
    long long pivots = 0;
    long long bigFallbacks = 0;
};

/** Process-wide counters, for reports and performance tests. */
LpCounters lpCounters();
void resetLpCounters();

}  // namespace geomjoin

#endif
