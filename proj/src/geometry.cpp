#include "geomjoin/geometry.hpp"

#include <algorithm>

namespace geomjoin {

bool QPoint::isZero() const {
    return std::all_of(coords.begin(), coords.end(), [](const Rat& c) { return c == 0; });
}

QPoint operator+(const QPoint& a, const QPoint& b) {
    requireDim(b, a.dim(), "QPoint+");
    QPoint r = a;
    for (int i = 0; i < a.dim(); ++i) r[i] += b[i];
    return r;
}

QPoint operator-(const QPoint& a, const QPoint& b) {
    requireDim(b, a.dim(), "QPoint-");
    QPoint r = a;
    for (int i = 0; i < a.dim(); ++i) r[i] -= b[i];
    return r;
}

QPoint operator*(const Rat& s, const QPoint& p) {
    QPoint r = p;
    for (auto& c : r.coords) c *= s;
    return r;
}

Rat dot(const QPoint& a, const QPoint& b) {
    requireDim(b, a.dim(), "dot");
    Rat s = 0;
    for (int i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
}

bool lexLess(const QPoint& a, const QPoint& b) {
    return std::lexicographical_compare(a.coords.begin(), a.coords.end(),
                                        b.coords.begin(), b.coords.end());
}

std::string formatPoint(const QPoint& p) {
    std::string s = "(";
    for (int i = 0; i < p.dim(); ++i) {
        if (i) s += ", ";
        s += formatRat(p[i]);
    }
    return s + ")";
}

Rat Hyperplane::evaluate(const QPoint& p) const {
    requireDim(p, dim(), "Hyperplane::evaluate");
    Rat s = 0;
    for (int i = 0; i < dim(); ++i) s += normal[static_cast<std::size_t>(i)] * p[i];
    return s;
}

Box Box::ofPoints(const std::vector<QPoint>& pts) {
    Box b;
    if (pts.empty()) return b;
    b.lo = pts[0].coords;
    b.hi = pts[0].coords;
    for (std::size_t k = 1; k < pts.size(); ++k) {
        for (int i = 0; i < pts[k].dim(); ++i) {
            const Rat& c = pts[k][i];
            if (c < b.lo[static_cast<std::size_t>(i)]) b.lo[static_cast<std::size_t>(i)] = c;
            if (c > b.hi[static_cast<std::size_t>(i)]) b.hi[static_cast<std::size_t>(i)] = c;
        }
    }
    return b;
}

Box Box::intersect(const Box& a, const Box& b) {
    if (a.lo.empty()) return b;
    if (b.lo.empty()) return a;
    Box r = a;
    for (std::size_t i = 0; i < r.lo.size(); ++i) {
        r.lo[i] = std::max(r.lo[i], b.lo[i]);
        r.hi[i] = std::min(r.hi[i], b.hi[i]);
    }
    return r;
}

bool Box::empty() const {
    for (std::size_t i = 0; i < lo.size(); ++i)
        if (lo[i] > hi[i]) return true;
    return false;
}

bool Box::contains(const QPoint& p) const {
    for (std::size_t i = 0; i < lo.size(); ++i)
        if (p.coords[i] < lo[i] || p.coords[i] > hi[i]) return false;
    return true;
}

bool Box::overlaps(const Box& other) const {
    for (std::size_t i = 0; i < lo.size(); ++i)
        if (hi[i] < other.lo[i] || other.hi[i] < lo[i]) return false;
    return true;
}

}  // namespace geomjoin
