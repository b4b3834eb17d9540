#pragma once
#include <string>
#include <utility>
#include <vector>

#include "finecurves/surface.hpp"

namespace finecurves {

// A leg is a polyline inside one chart; a curve is a cyclic chain of legs.
// Consecutive legs (including last -> first) are glued: the end of one leg
// and the start of the next must name the same surface point, either
// literally, across an identified chart edge, or across a mouth gluing.
struct Leg {
    int chart = 0;
    std::vector<RatPoint> pts;
};

struct Curve {
    int label = 0;
    std::vector<Leg> legs;
    // Curves that traverse handles cannot be classified by torus_class; the
    // constructions mark them essential by isotopy to a base (0,1)-vertical.
    bool essential_certified = false;
};

struct CurveSystem {
    Surface surface;
    std::vector<Curve> curves;

    const Curve& curve_by_label(int label) const {
        for (const auto& c : curves)
            if (c.label == label) return c;
        throw UnknownLabel("curve " + std::to_string(label));
    }
    Curve& curve_by_label(int label) {
        for (auto& c : curves)
            if (c.label == label) return c;
        throw UnknownLabel("curve " + std::to_string(label));
    }
    bool has_label(int label) const {
        for (const auto& c : curves)
            if (c.label == label) return true;
        return false;
    }
};

// Canonical representative of a surface point used for cross-representation
// comparisons: identified edges fold to the 0 side, and base-chart points on
// a mouth perimeter map to the handle boundary circle.
struct CanonPoint {
    int chart;
    RatPoint p;
    bool operator==(const CanonPoint& o) const { return chart == o.chart && p == o.p; }
    bool operator<(const CanonPoint& o) const {
        if (chart != o.chart) return chart < o.chart;
        return point_less(p, o.p);
    }
};
CanonPoint canonical_point(const Surface& s, int chart, const RatPoint& p);

// Builds the base-chart legs of a closed curve from a lifted polyline
// v0..vM whose final point differs from v0 by an integer lattice vector
// (p*width, q*height); segments are split at wrap lines and folded into the
// fundamental domain. Returns the legs and the class (p, q).
std::pair<std::vector<Leg>, std::pair<long, long>>
legs_from_lifted(const Chart& chart, int chart_idx, const std::vector<RatPoint>& lifted);

// Structural validation of a whole system: distinct labels, legs inside
// extents and outside removed mouth squares, valid closure gluings.
void validate_system(const CurveSystem& sys);
void validate_curve(const Surface& s, const Curve& c);

// Enumerates (chart, segment) pieces of a curve in storage order.
struct CurveSeg {
    int chart;
    Segment seg;
    int leg_idx;
    int seg_idx;
};
std::vector<CurveSeg> curve_segments(const Curve& c);

// Unfolds a base-chart curve into the covering plane: the returned polyline
// starts at the curve's first stored point and ends at its translate by the
// lattice vector (p*width, q*height) of the curve's class. Throws
// NotBaseChartCurve when a leg lies in a handle chart.
std::vector<RatPoint> lift_closed(const Surface& s, const Curve& c);

// Reverses the orientation of a leg chain in place.
std::vector<Leg> reversed_legs(std::vector<Leg> legs);

} // namespace finecurves
