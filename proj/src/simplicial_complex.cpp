#include "geomjoin/simplicial_complex.hpp"

#include <algorithm>

namespace geomjoin {

bool SimplicialComplex::hasFace(const Face& f) const {
    const int dim = static_cast<int>(f.size()) - 1;
    if (dim < 0 || dim >= static_cast<int>(facesByDim.size())) return false;
    const auto& level = facesByDim[static_cast<std::size_t>(dim)];
    return std::binary_search(level.begin(), level.end(), f);
}

SimplicialComplex SimplicialComplex::fullSimplex(int n, int cap) {
    SimplicialComplex c;
    c.vertexCount = n;
    c.dimensionCap = cap;
    c.facesByDim.resize(static_cast<std::size_t>(cap) + 1);
    Face cur;
    auto rec = [&](auto&& self, int from) -> void {
        if (!cur.empty())
            c.facesByDim[cur.size() - 1].push_back(cur);
        if (static_cast<int>(cur.size()) == cap + 1) return;
        for (int v = from; v < n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    for (auto& level : c.facesByDim) std::sort(level.begin(), level.end());
    return c;
}

void SimplicialComplex::audit() const {
    for (int dim = 0; dim < static_cast<int>(facesByDim.size()); ++dim) {
        const auto& level = facesByDim[static_cast<std::size_t>(dim)];
        if (!std::is_sorted(level.begin(), level.end()))
            throw InternalInconsistencyError("complex: face level not sorted");
        for (const auto& f : level) {
            if (static_cast<int>(f.size()) != dim + 1)
                throw InternalInconsistencyError("complex: face in wrong level");
            if (!std::is_sorted(f.begin(), f.end()) ||
                std::adjacent_find(f.begin(), f.end()) != f.end())
                throw InternalInconsistencyError("complex: face vertices not strictly sorted");
            for (int v : f)
                if (v < 0 || v >= vertexCount)
                    throw InternalInconsistencyError("complex: vertex id out of range");
            if (dim == 0) continue;
            Face sub;
            sub.reserve(f.size() - 1);
            for (std::size_t drop = 0; drop < f.size(); ++drop) {
                sub.clear();
                for (std::size_t i = 0; i < f.size(); ++i)
                    if (i != drop) sub.push_back(f[i]);
                if (!hasFace(sub))
                    throw InternalInconsistencyError("complex: missing subface (not downward closed)");
            }
        }
    }
}

std::string SimplicialComplex::dump() const {
    std::string out;
    for (const auto& level : facesByDim) {
        for (const auto& f : level) {
            for (std::size_t i = 0; i < f.size(); ++i) {
                if (i) out += ' ';
                out += std::to_string(f[i]);
            }
            out += '\n';
        }
    }
    return out;
}

}  // namespace geomjoin
