#ifndef GEOMJOIN_SIMPLICIAL_COMPLEX_HPP
#define GEOMJOIN_SIMPLICIAL_COMPLEX_HPP

#include <string>
#include <vector>

#include "geomjoin/errors.hpp"

namespace geomjoin {

using Face = std::vector<int>;  // strictly increasing vertex ids

/**
 * A finite abstract simplicial complex stored by dimension, downward closed
 * up to dimensionCap.  Faces above the cap are not represented.  All face
 * lists are lexicographically sorted.
 */
struct SimplicialComplex {
    int vertexCount = 0;
    int dimensionCap = 0;
    std::vector<std::vector<Face>> facesByDim;  // index = dimension

    int faceCount(int dim) const {
        if (dim < 0 || dim >= static_cast<int>(facesByDim.size())) return 0;
        return static_cast<int>(facesByDim[static_cast<std::size_t>(dim)].size());
    }
    long long totalFaces() const {
        long long t = 0;
        for (const auto& fs : facesByDim) t += static_cast<long long>(fs.size());
        return t;
    }
    /** Highest dimension with at least one face, -1 when empty. */
    int topDimension() const {
        for (int k = static_cast<int>(facesByDim.size()) - 1; k >= 0; --k)
            if (faceCount(k) > 0) return k;
        return -1;
    }
    bool hasFace(const Face& f) const;

    /** The full simplex on n vertices truncated at cap. */
    static SimplicialComplex fullSimplex(int n, int cap);

    /**
     * Checks sortedness and downward closure up to the cap; throws
     * InternalInconsistencyError on violation.
     */
    void audit() const;

    /** One face per line, vertices space-separated, sorted by (dim, lex). */
    std::string dump() const;
};

}  // namespace geomjoin

#endif
