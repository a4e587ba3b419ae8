#pragma once

// Exact planar primitives: rational points, open unit disks, rectangles.
// Disk membership is the strict predicate (x-cx)^2 + (y-cy)^2 < 1 evaluated
// over exact rationals; the radius is identically 1 and never stored.

#include "coversplit/hypergraph.hpp"
#include "coversplit/rational.hpp"

#include <vector>

namespace coversplit {

struct RationalPoint {
    Rational x;
    Rational y;

    bool operator==(const RationalPoint& o) const { return x == o.x && y == o.y; }
};

inline RationalPoint operator+(const RationalPoint& a, const RationalPoint& b) {
    return {a.x + b.x, a.y + b.y};
}

struct UnitDisk {
    RationalPoint center;
    Color klass = Color::Red;
    int id = -1;

    RationalPoint topmost() const { return {center.x, center.y + 1}; }
    RationalPoint bottommost() const { return {center.x, center.y - 1}; }
};

inline Rational squared_distance(const RationalPoint& a, const RationalPoint& b) {
    const Rational dx = a.x - b.x;
    const Rational dy = a.y - b.y;
    return dx * dx + dy * dy;
}

/// Strict open-disk membership, exact.
inline bool contains(const UnitDisk& d, const RationalPoint& p) {
    return squared_distance(d.center, p) < 1;
}

/// Closed-disk membership, exact; used for exposedness checks.
inline bool closure_contains(const UnitDisk& d, const RationalPoint& p) {
    return squared_distance(d.center, p) <= 1;
}

struct Rect {
    Rational x0, y0, x1, y1;  // x0 <= x1, y0 <= y1

    bool contains_closed(const RationalPoint& p) const {
        return p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1;
    }
    bool contains_open(const RationalPoint& p) const {
        return p.x > x0 && p.x < x1 && p.y > y0 && p.y < y1;
    }
};

}  // namespace coversplit
