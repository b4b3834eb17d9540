#pragma once
#include <optional>
#include <string>
#include <vector>

#include "finecurves/geom.hpp"

namespace finecurves {

// Charts are axis-aligned rectangles [0,w] x [0,h] with edge identifications
// by translation:
//   TorusSquare     x ~ x+w and y ~ y+h (both pairs identified)
//   AnnulusRect     y ~ y+h only (x in [0,w] is the interval direction)
//   HandleCylinder  x ~ x+w only (the two ends y=0, y=h are boundary circles)
enum class ChartKind { TorusSquare, AnnulusRect, HandleCylinder };

struct Chart {
    ChartKind kind;
    Rat width, height;
    bool wraps_x() const { return kind != ChartKind::AnnulusRect; }
    bool wraps_y() const { return kind == ChartKind::TorusSquare || kind == ChartKind::AnnulusRect; }
};

// An axis-aligned open square removed from a base chart, glued to one
// boundary circle of a handle cylinder by the arc-length-affine map that
// identifies the square perimeter (counterclockwise from the bottom-left
// corner) with the circle. The cylinder width equals the perimeter 4*side,
// so the gluing is an arc-length isometry; the y=h end reverses orientation
// so the handle is attached orientably.
struct Mouth {
    int base_chart = 0;
    RatPoint center;
    Rat side;
    int handle_chart = 0;
    int handle_end = 0; // 0: glued to y=0 circle, 1: glued to y=height circle
    Rat xmin() const { return center.x - side / 2; }
    Rat xmax() const { return center.x + side / 2; }
    Rat ymin() const { return center.y - side / 2; }
    Rat ymax() const { return center.y + side / 2; }
};

enum class SurfaceKind { Torus, Annulus, FineHandles };

struct Surface {
    SurfaceKind kind = SurfaceKind::Torus;
    int param = 0; // n for FineHandles
    std::string label;
    std::vector<Chart> charts;
    std::vector<Mouth> mouths;

    int handle_count() const {
        int c = 0;
        for (const auto& ch : charts)
            if (ch.kind == ChartKind::HandleCylinder) ++c;
        return c;
    }
    const Chart& chart(int idx) const {
        if (idx < 0 || idx >= static_cast<int>(charts.size()))
            throw UnknownChart("chart index " + std::to_string(idx));
        return charts[static_cast<size_t>(idx)];
    }
};

// The vertical-curve handle surface: a unit torus square plus one handle
// A_{i,j} for every pair i<j with j-i >= 2 and {i,j} != {0,n-1}. Mouths sit
// just right of the verticals x=(2i+1)/(2n) at partner-indexed heights
// (2j+1)/(2n), side 1/(16 n^3), clearance 1/(64 n^3).
Surface build_surface(SurfaceKind kind, int n = 0);

// Stable names used by certificates and the command line:
// "torus" | "annulus" | "fine-handles".
std::string surface_kind_name(SurfaceKind kind);
SurfaceKind parse_surface_kind(const std::string& text);

// Pairs {i,j} that receive a handle in FineHandles(n), in construction order.
std::vector<std::pair<int, int>> fine_handle_pairs(int n);

// Handle/mouth lookup for FineHandles surfaces: mouths 2t (near curve i) and
// 2t+1 (near curve j) belong to the t-th pair.
int fine_handle_index(const Surface& s, int i, int j);

// Perimeter parameter of p on the mouth square boundary, counterclockwise
// from the bottom-left corner, in [0, 4*side); nullopt if p is off the
// perimeter.
std::optional<Rat> mouth_perimeter_param(const Mouth& m, const RatPoint& p);
RatPoint mouth_perimeter_point(const Mouth& m, const Rat& t);

// Gluing maps between a mouth perimeter and its handle boundary circle.
RatPoint mouth_to_handle(const Surface& s, int mouth_idx, const RatPoint& base_pt);
std::optional<RatPoint> handle_to_mouth(const Surface& s, int mouth_idx, const RatPoint& handle_pt);

// Structural checks: positive extents, mouths strictly inside their base
// chart, pairwise disjoint, away from identified edges, exactly two mouths
// per handle cylinder. Throws on violation.
void validate_surface(const Surface& s);

} // namespace finecurves
