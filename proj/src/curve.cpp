#include "finecurves/curve.hpp"

#include <algorithm>
#include <set>

namespace finecurves {

CanonPoint canonical_point(const Surface& s, int chart, const RatPoint& p) {
    const Chart& ch = s.chart(chart);
    RatPoint q = p;
    if (ch.kind != ChartKind::HandleCylinder) {
        // A base-chart point on a mouth perimeter lives on the gluing circle;
        // represent it on the handle side.
        for (size_t mi = 0; mi < s.mouths.size(); ++mi) {
            const Mouth& m = s.mouths[mi];
            if (m.base_chart != chart) continue;
            if (mouth_perimeter_param(m, q)) {
                RatPoint h = mouth_to_handle(s, static_cast<int>(mi), q);
                return canonical_point(s, m.handle_chart, h);
            }
        }
    }
    if (ch.wraps_x() && q.x == ch.width) q.x = 0;
    if (ch.wraps_y() && q.y == ch.height) q.y = 0;
    return {chart, q};
}

std::pair<std::vector<Leg>, std::pair<long, long>>
legs_from_lifted(const Chart& chart, int chart_idx, const std::vector<RatPoint>& lifted) {
    if (lifted.size() < 2) throw EmptyLeg("lifted loop needs at least two points");
    const Rat W = chart.width, H = chart.height;
    const RatPoint d = lifted.back() - lifted.front();
    if (chart.wraps_x()) {
        if (denominator(Rat(d.x / W)) != 1) throw OpenCurve("lifted loop x-displacement not a lattice vector");
    } else if (d.x != 0) {
        throw OpenCurve("lifted loop does not close in x");
    }
    if (chart.wraps_y()) {
        if (denominator(Rat(d.y / H)) != 1) throw OpenCurve("lifted loop y-displacement not a lattice vector");
    } else if (d.y != 0) {
        throw OpenCurve("lifted loop does not close in y");
    }
    const long p = chart.wraps_x() ? static_cast<long>(numerator(Rat(d.x / W))) : 0;
    const long q = chart.wraps_y() ? static_cast<long>(numerator(Rat(d.y / H))) : 0;

    auto floor_div = [](const Rat& v, const Rat& unit) -> Int {
        // floor(v / unit) for unit > 0
        Rat r = v / unit;
        Int fl = numerator(r) / denominator(r);
        if (r < 0 && fl * denominator(r) != numerator(r)) fl -= 1;
        return fl;
    };

    // Refine: insert every interior crossing of a wrap line.
    std::vector<RatPoint> refined;
    refined.push_back(lifted.front());
    for (size_t k = 0; k + 1 < lifted.size(); ++k) {
        const RatPoint a = lifted[k], b = lifted[k + 1];
        if (a == b) throw DegenerateSegment("repeated lifted vertex");
        std::vector<Rat> ts;
        auto add_axis = [&](const Rat& av, const Rat& bv, const Rat& unit, bool wraps) {
            if (!wraps || av == bv) return;
            const Rat lo = std::min(av, bv), hi = std::max(av, bv);
            for (Int m = floor_div(lo, unit) + 1; Rat(m) * unit < hi; ++m) {
                const Rat line = Rat(m) * unit;
                if (line > lo) ts.push_back((line - av) / (bv - av));
            }
        };
        add_axis(a.x, b.x, W, chart.wraps_x());
        add_axis(a.y, b.y, H, chart.wraps_y());
        std::sort(ts.begin(), ts.end());
        ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
        for (const Rat& t : ts) {
            RatPoint pt = a + t * (b - a);
            if (pt != refined.back()) refined.push_back(pt);
        }
        if (b != refined.back()) refined.push_back(b);
    }

    // Group refined segments into cells; each leg folds by its cell offset.
    struct Cell {
        Int cx, cy;
        bool operator==(const Cell& o) const { return cx == o.cx && cy == o.cy; }
    };
    auto seg_cell = [&](const RatPoint& a, const RatPoint& b) -> Cell {
        const RatPoint mid = a + Rat(1, 2) * (b - a);
        return {chart.wraps_x() ? floor_div(mid.x, W) : Int(0),
                chart.wraps_y() ? floor_div(mid.y, H) : Int(0)};
    };
    auto fold = [&](const RatPoint& pt, const Cell& c) -> RatPoint {
        return {pt.x - Rat(c.cx) * W, pt.y - Rat(c.cy) * H};
    };

    std::vector<Leg> legs;
    Leg cur;
    cur.chart = chart_idx;
    Cell cell = seg_cell(refined[0], refined[1]);
    cur.pts.push_back(fold(refined[0], cell));
    for (size_t k = 0; k + 1 < refined.size(); ++k) {
        const Cell c = seg_cell(refined[k], refined[k + 1]);
        if (!(c == cell)) {
            legs.push_back(cur);
            cur = Leg{chart_idx, {fold(refined[k], c)}};
            cell = c;
        }
        cur.pts.push_back(fold(refined[k + 1], cell));
    }
    legs.push_back(cur);
    return {legs, {p, q}};
}

std::vector<CurveSeg> curve_segments(const Curve& c) {
    std::vector<CurveSeg> out;
    for (size_t li = 0; li < c.legs.size(); ++li) {
        const Leg& leg = c.legs[li];
        for (size_t si = 0; si + 1 < leg.pts.size(); ++si)
            out.push_back({leg.chart, {leg.pts[si], leg.pts[si + 1]},
                           static_cast<int>(li), static_cast<int>(si)});
    }
    return out;
}

// --- validation -------------------------------------------------------------

static bool inside_extents(const Chart& ch, const RatPoint& p) {
    return p.x >= 0 && p.x <= ch.width && p.y >= 0 && p.y <= ch.height;
}

// Exact clip of a segment to a closed axis-aligned box; returns the clipped
// parameter interval [t0,t1] of s, or nothing.
static bool clip_to_box(const Segment& s, const Rat& x0, const Rat& x1, const Rat& y0,
                        const Rat& y1, Rat& t0, Rat& t1) {
    t0 = 0;
    t1 = 1;
    auto slab = [&](const Rat& a, const Rat& d, const Rat& lo, const Rat& hi) {
        if (d == 0) return a >= lo && a <= hi;
        Rat u0 = (lo - a) / d, u1 = (hi - a) / d;
        if (u0 > u1) std::swap(u0, u1);
        t0 = std::max(t0, u0);
        t1 = std::min(t1, u1);
        return t0 <= t1;
    };
    const RatVec d = s.b - s.a;
    return slab(s.a.x, d.x, x0, x1) && slab(s.a.y, d.y, y0, y1);
}

void validate_curve(const Surface& s, const Curve& c) {
    if (c.legs.empty()) throw EmptyLeg("curve " + std::to_string(c.label) + " has no legs");
    for (const Leg& leg : c.legs) {
        const Chart& ch = s.chart(leg.chart);
        if (leg.pts.size() < 2) throw EmptyLeg("leg with fewer than two points");
        for (size_t k = 0; k < leg.pts.size(); ++k) {
            if (k > 0 && leg.pts[k] == leg.pts[k - 1])
                throw DegenerateSegment("repeated consecutive leg point");
            if (!inside_extents(ch, leg.pts[k]))
                throw LegOutsideChart("curve " + std::to_string(c.label) + " leaves its chart");
        }
        // Legs may touch mouth perimeters only at isolated points (gluing
        // entries); any positive-length incursion into the closed square is
        // rejected, which also bans running along a perimeter edge.
        for (size_t k = 0; k + 1 < leg.pts.size(); ++k) {
            const Segment seg{leg.pts[k], leg.pts[k + 1]};
            for (const Mouth& m : s.mouths) {
                if (m.base_chart != leg.chart) continue;
                Rat t0, t1;
                if (clip_to_box(seg, m.xmin(), m.xmax(), m.ymin(), m.ymax(), t0, t1) && t0 < t1)
                    throw LegInMouth("curve " + std::to_string(c.label) +
                                     " enters a removed mouth square");
            }
        }
    }
    // Closure: every joint, including last -> first, must glue.
    for (size_t li = 0; li < c.legs.size(); ++li) {
        const Leg& a = c.legs[li];
        const Leg& b = c.legs[(li + 1) % c.legs.size()];
        const CanonPoint ca = canonical_point(s, a.chart, a.pts.back());
        const CanonPoint cb = canonical_point(s, b.chart, b.pts.front());
        if (!(ca == cb))
            throw OpenCurve("curve " + std::to_string(c.label) + " joint " + std::to_string(li) +
                            " does not glue");
    }
}

void validate_system(const CurveSystem& sys) {
    validate_surface(sys.surface);
    std::set<int> labels;
    for (const Curve& c : sys.curves) {
        if (!labels.insert(c.label).second)
            throw DuplicateLabel("curve label " + std::to_string(c.label));
        validate_curve(sys.surface, c);
    }
}

std::vector<RatPoint> lift_closed(const Surface& s, const Curve& c) {
    if (c.legs.empty()) throw EmptyLeg("curve " + std::to_string(c.label) + " has no legs");
    for (const Leg& l : c.legs)
        if (s.chart(l.chart).kind != ChartKind::TorusSquare &&
            s.chart(l.chart).kind != ChartKind::AnnulusRect)
            throw NotBaseChartCurve("curve " + std::to_string(c.label) +
                                    " has a leg in a handle chart");
    std::vector<RatPoint> lifted = c.legs.front().pts;
    for (std::size_t li = 1; li < c.legs.size(); ++li) {
        const Leg& leg = c.legs[li];
        // Successive base legs glue across identified edges, so the lifted
        // translate offset is the difference of the two joint representatives.
        const RatVec off = lifted.back() - leg.pts.front();
        for (std::size_t k = 1; k < leg.pts.size(); ++k) lifted.push_back(leg.pts[k] + off);
    }
    // The final stored point refolds to the first one, so the lifted walk ends
    // at lifted.front() + (p*width, q*height) with no extra closing edge.
    return lifted;
}

std::vector<Leg> reversed_legs(std::vector<Leg> legs) {
    std::reverse(legs.begin(), legs.end());
    for (Leg& l : legs) std::reverse(l.pts.begin(), l.pts.end());
    return legs;
}

} // namespace finecurves
