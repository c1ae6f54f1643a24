#ifndef GEOMJOIN_HOMOLOGY_HPP
#define GEOMJOIN_HOMOLOGY_HPP

#include <vector>

#include "geomjoin/rational.hpp"
#include "geomjoin/simplicial_complex.hpp"

namespace geomjoin {

/**
 * Betti numbers and torsion coefficients for dimensions 0..cap-1, computed
 * from integer Smith normal forms of the boundary matrices.  The boundary
 * from dimension cap is available, so homology below the cap agrees with
 * the uncapped complex.
 */
struct HomologyReport {
    std::vector<long long> betti;               // index = dimension
    std::vector<std::vector<BigInt>> torsion;   // invariant factors > 1 of H_k
    bool reduced = false;

    int maxDim() const { return static_cast<int>(betti.size()) - 1; }
    long long bettiAt(int dim) const;           // InputError beyond maxDim
    bool allZero() const;
};

HomologyReport homology(const SimplicialComplex& complex, bool reduced);

/** Sparse integer matrix in column-major form, for boundary operators. */
struct SparseIntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<std::pair<int, BigInt>>> columns;  // sorted by row
};

struct SmithSummary {
    long long rank = 0;
    std::vector<BigInt> invariantFactors;  // full divisibility chain, abs values
};

/** Smith normal form summary; destroys its argument. */
SmithSummary smithNormalForm(SparseIntMatrix matrix);

/** Boundary operator from dimension dim of the complex (dim >= 1). */
SparseIntMatrix boundaryMatrix(const SimplicialComplex& complex, int dim);

}  // namespace geomjoin

#endif
