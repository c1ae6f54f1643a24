#ifndef GEOMJOIN_GEOMETRY_HPP
#define GEOMJOIN_GEOMETRY_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "geomjoin/errors.hpp"
#include "geomjoin/rational.hpp"

namespace geomjoin {

/** A point of R^d with exact rational coordinates. */
struct QPoint {
    std::vector<Rat> coords;

    QPoint() = default;
    explicit QPoint(std::vector<Rat> c) : coords(std::move(c)) {}
    QPoint(std::initializer_list<Rat> c) : coords(c) {}
    static QPoint zero(int d) { return QPoint(std::vector<Rat>(static_cast<std::size_t>(d))); }

    int dim() const { return static_cast<int>(coords.size()); }
    Rat& operator[](int i) { return coords[static_cast<std::size_t>(i)]; }
    const Rat& operator[](int i) const { return coords[static_cast<std::size_t>(i)]; }

    bool operator==(const QPoint& o) const = default;
    bool isZero() const;
};

QPoint operator+(const QPoint& a, const QPoint& b);
QPoint operator-(const QPoint& a, const QPoint& b);
QPoint operator*(const Rat& s, const QPoint& p);
Rat dot(const QPoint& a, const QPoint& b);

/** Lexicographic coordinate order; used only for deterministic tie-breaks. */
bool lexLess(const QPoint& a, const QPoint& b);

std::string formatPoint(const QPoint& p);

/**
 * Oriented affine hyperplane {x : <normal, x> = offset}.  The separation
 * convention throughout: the "positive" side satisfies <normal, x> > offset.
 */
struct Hyperplane {
    std::vector<Rat> normal;
    Rat offset;

    int dim() const { return static_cast<int>(normal.size()); }
    Rat evaluate(const QPoint& p) const;
};

/** Axis-aligned bounding box with exact bounds. */
struct Box {
    std::vector<Rat> lo, hi;

    static Box ofPoints(const std::vector<QPoint>& pts);
    static Box intersect(const Box& a, const Box& b);
    bool empty() const;
    bool contains(const QPoint& p) const;
    bool overlaps(const Box& other) const;
};

inline void requireDim(const QPoint& p, int d, const char* where) {
    if (p.dim() != d) throw InputError(std::string(where) + ": dimension mismatch");
}

}  // namespace geomjoin

#endif
