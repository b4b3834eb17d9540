#pragma once
#include <vector>

#include "finecurves/curve.hpp"

namespace finecurves {

enum class PointKind { Crossing, Touching, Unclassified };

// Position of a surface point along a curve: leg index, segment index within
// the leg, and the parameter t in [0,1) along that segment. Vertex passages
// normalize to t == 0 of the outgoing segment, so every passage has a unique
// key and keys sort in traversal order around the curve.
struct Passage {
    int leg = 0;
    int seg = 0;
    Rat t{};
};
bool operator<(const Passage& a, const Passage& b);
bool operator==(const Passage& a, const Passage& b);

struct IsectPoint {
    CanonPoint at;
    std::vector<Passage> on_a, on_b; // sorted passages of each curve
    PointKind kind = PointKind::Unclassified;
};

struct OverlapSeg {
    int chart = 0;
    Segment seg;
};

struct IntersectionReport {
    bool infinite = false;          // a positive-length shared subsegment exists
    std::vector<IsectPoint> points; // isolated meeting points, sorted along a
    std::vector<OverlapSeg> overlaps;
    bool disjoint() const { return !infinite && points.empty(); }
    std::size_t count() const { return points.size(); }
};

// All meeting points of two curves, exact and deduplicated across chart
// representations (wrap edges, mouth gluings). A point is classified
// Crossing/Touching when each curve passes through it once and the local
// star can be transported into a single chart; otherwise Unclassified.
IntersectionReport intersection_report(const Surface& s, const Curve& a, const Curve& b);

// True when the curve is simple: no self-meeting beyond the consecutive
// gluing of its own segments.
bool is_embedded(const Surface& s, const Curve& c);

// Lattice class (p, q) of a closed curve whose legs all avoid handle
// cylinders, from the displacement of the unfolded walk. On the annulus p is
// always 0. Throws NotBaseChartCurve when a leg lies in a handle chart.
std::pair<Int, Int> torus_class(const Surface& s, const Curve& c);

// True when the image of c is contained in the union of the cover curves'
// images (exact interval coverage, segment by segment).
bool is_contained_in_union(const Surface& s, const Curve& c, const std::vector<Curve>& cover);

// Parameter of p along s; p must lie on the supporting line of s.
Rat param_on_segment(const Segment& s, const RatPoint& p);

// Chart-local representations of a canonical point in the given chart:
// unfolded wrap-edge copies, and the base-perimeter preimage when the point
// sits on a handle boundary circle.
std::vector<RatPoint> reps_in_chart(const Surface& s, const CanonPoint& cp, int chart);

// All passages of c through the surface point cp, deduplicated.
std::vector<Passage> passages_at(const Surface& s, const Curve& c, const CanonPoint& cp);

// Chart-local point of a normalized passage.
RatPoint passage_point(const Curve& c, const Passage& p);

// The arc of c walked forward from one passage to another (cyclically),
// including both endpoints, split into legs at chart changes. The two
// passages must be distinct.
std::vector<Leg> arc_between(const Curve& c, const Passage& from, const Passage& to);

// True when q lies strictly inside the forward walk from `from` to `to`.
bool passage_strictly_between(const Passage& from, const Passage& q, const Passage& to);

} // namespace finecurves
