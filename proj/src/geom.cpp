#include "finecurves/geom.hpp"

#include <algorithm>

namespace finecurves {

int orient(const RatPoint& p, const RatPoint& q, const RatPoint& r) {
    return sgn(cross(q - p, r - p));
}

bool on_segment(const RatPoint& p, const Segment& s) {
    if (orient(s.a, s.b, p) != 0) return false;
    return std::min(s.a.x, s.b.x) <= p.x && p.x <= std::max(s.a.x, s.b.x) &&
           std::min(s.a.y, s.b.y) <= p.y && p.y <= std::max(s.a.y, s.b.y);
}

static void require_proper(const Segment& s) {
    if (s.a == s.b) throw DegenerateSegment("segment endpoints coincide");
}

SegIntersection segment_intersect(const Segment& s, const Segment& t) {
    require_proper(s);
    require_proper(t);
    SegIntersection res;

    const RatVec d1 = s.b - s.a, d2 = t.b - t.a;
    const Rat denom = cross(d1, d2);

    if (denom == 0) {
        // Parallel. Either disjoint lines or a common supporting line.
        if (orient(s.a, s.b, t.a) != 0) return res;
        // Collinear: project on the dominant axis of d1 and intersect ranges.
        auto key = [&](const RatPoint& p) -> Rat {
            return rat_abs(d1.x) >= rat_abs(d1.y) ? p.x : p.y;
        };
        RatPoint slo = s.a, shi = s.b, tlo = t.a, thi = t.b;
        if (key(slo) > key(shi)) std::swap(slo, shi);
        if (key(tlo) > key(thi)) std::swap(tlo, thi);
        const RatPoint lo = key(slo) >= key(tlo) ? slo : tlo;
        const RatPoint hi = key(shi) <= key(thi) ? shi : thi;
        if (key(lo) > key(hi)) return res;
        if (lo == hi) {
            res.kind = SegIntersection::Point;
            res.point = lo;
            return res;
        }
        res.kind = SegIntersection::Overlap;
        res.ov_a = lo;
        res.ov_b = hi;
        if (!point_less(res.ov_a, res.ov_b)) std::swap(res.ov_a, res.ov_b);
        return res;
    }

    // Proper line intersection; check both parameters lie in [0,1].
    const Rat tnum = cross(t.a - s.a, d2);
    const Rat unum = cross(t.a - s.a, d1);
    const Rat tp = tnum / denom, up = unum / denom;
    if (tp < 0 || tp > 1 || up < 0 || up > 1) return res;
    res.kind = SegIntersection::Point;
    res.point = s.a + tp * d1;
    return res;
}

bool ray_less(const RatVec& u, const RatVec& v) {
    auto half = [](const RatVec& w) {
        // 0 for angles in [0, pi), 1 for [pi, 2pi).
        if (w.y != 0) return w.y > 0 ? 0 : 1;
        return w.x > 0 ? 0 : 1;
    };
    const int hu = half(u), hv = half(v);
    if (hu != hv) return hu < hv;
    return cross(u, v) > 0;
}

LocalKind classify_local(const LocalStar& star) {
    struct Tagged {
        RatVec d;
        int owner; // 0 = curve a, 1 = curve b
    };
    std::array<Tagged, 4> rays = {Tagged{star.dirs_a[0], 0}, Tagged{star.dirs_a[1], 0},
                                  Tagged{star.dirs_b[0], 1}, Tagged{star.dirs_b[1], 1}};
    for (const auto& r : rays)
        if (r.d.x == 0 && r.d.y == 0) throw DegenerateStar("zero direction");

    auto same_ray = [](const RatVec& u, const RatVec& v) {
        return cross(u, v) == 0 && dot(u, v) > 0;
    };
    // Equal rays across the two curves mean the strands share a germ, which is
    // an overlap rather than an isolated point; equal rays within one curve
    // mean the strand doubles back on itself.
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (same_ray(rays[i].d, rays[j].d)) throw DegenerateStar("coincident direction rays");

    std::stable_sort(rays.begin(), rays.end(),
                     [](const Tagged& p, const Tagged& q) { return ray_less(p.d, q.d); });
    // Crossing iff owners alternate in cyclic order.
    const bool alternating = rays[0].owner != rays[1].owner && rays[1].owner != rays[2].owner &&
                             rays[2].owner != rays[3].owner;
    return alternating ? LocalKind::Crossing : LocalKind::Touching;
}

int winding_number(const std::vector<RatPoint>& loop, const RatPoint& p) {
    int w = 0;
    const std::size_t n = loop.size();
    for (std::size_t i = 0; i < n; ++i) {
        const RatPoint& a = loop[i];
        const RatPoint& b = loop[(i + 1) % n];
        if (a.y <= p.y && p.y < b.y) {
            if (orient(a, b, p) > 0) ++w;
        } else if (b.y <= p.y && p.y < a.y) {
            if (orient(a, b, p) < 0) --w;
        }
    }
    return w;
}

bool on_polyline(const std::vector<RatPoint>& loop, const RatPoint& p) {
    const std::size_t n = loop.size();
    for (std::size_t i = 0; i < n; ++i) {
        const RatPoint& a = loop[i];
        const RatPoint& b = loop[(i + 1) % n];
        if (a == b) {
            if (p == a) return true;
            continue;
        }
        if (on_segment(p, Segment{a, b})) return true;
    }
    return false;
}

} // namespace finecurves
