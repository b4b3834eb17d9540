#pragma once
#include <array>
#include <optional>
#include <vector>

#include "finecurves/rational.hpp"

namespace finecurves {

struct RatPoint {
    Rat x, y;
    bool operator==(const RatPoint& o) const { return x == o.x && y == o.y; }
    bool operator!=(const RatPoint& o) const { return !(*this == o); }
};

using RatVec = RatPoint;

inline RatPoint operator+(const RatPoint& a, const RatPoint& b) { return {a.x + b.x, a.y + b.y}; }
inline RatPoint operator-(const RatPoint& a, const RatPoint& b) { return {a.x - b.x, a.y - b.y}; }
inline RatPoint operator*(const Rat& s, const RatPoint& p) { return {s * p.x, s * p.y}; }

inline Rat cross(const RatVec& u, const RatVec& v) { return u.x * v.y - u.y * v.x; }
inline Rat dot(const RatVec& u, const RatVec& v) { return u.x * v.x + u.y * v.y; }

// Deterministic total order on points (x, then y) for canonical output.
inline bool point_less(const RatPoint& a, const RatPoint& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

// Closed segment with distinct endpoints.
struct Segment {
    RatPoint a, b;
};

// Sign of the determinant | q-p  r-p |: +1 left turn, -1 right turn, 0 collinear.
int orient(const RatPoint& p, const RatPoint& q, const RatPoint& r);

// True when p lies on the closed segment s (collinear and inside the box).
bool on_segment(const RatPoint& p, const Segment& s);

struct SegIntersection {
    enum Kind { Empty, Point, Overlap } kind = Empty;
    RatPoint point;      // set when kind == Point
    RatPoint ov_a, ov_b; // set when kind == Overlap; ov_a < ov_b in point order
};

// Exact closed-segment intersection: a single point, a shared collinear
// subsegment (reported with sorted endpoints), or nothing.
// Throws DegenerateSegment when either segment has equal endpoints.
SegIntersection segment_intersect(const Segment& s, const Segment& t);

// Local picture of two PL curve strands through a common point: the two
// outgoing directions of each curve. Directions need not be normalized.
struct LocalStar {
    RatPoint center;
    std::array<RatVec, 2> dirs_a;
    std::array<RatVec, 2> dirs_b;
};

enum class LocalKind { Crossing, Touching };

// Classifies the star by the cyclic order of the four direction rays around
// the center: the curves cross exactly when the rays of b separate the rays
// of a. Throws DegenerateStar on zero directions or when a ray of one curve
// equals a ray of the other (a germ of a shared subsegment, which is an
// overlap and not an isolated intersection point).
LocalKind classify_local(const LocalStar& star);

// Exact cyclic ray comparator used by classify_local; exposed for tests.
// Returns true when ray u precedes ray v in counterclockwise order starting
// from the positive x axis.
bool ray_less(const RatVec& u, const RatVec& v);

// Winding number of the closed polyline loop[0..n-1] (closing edge implied)
// around p, by exact crossing counts. p must not lie on the loop.
int winding_number(const std::vector<RatPoint>& loop, const RatPoint& p);

// True when p lies on some edge of the closed polyline.
bool on_polyline(const std::vector<RatPoint>& loop, const RatPoint& p);

} // namespace finecurves
