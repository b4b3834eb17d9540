#include "finecurves/intersect.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace finecurves {

bool operator<(const Passage& a, const Passage& b) {
    if (a.leg != b.leg) return a.leg < b.leg;
    if (a.seg != b.seg) return a.seg < b.seg;
    return a.t < b.t;
}

bool operator==(const Passage& a, const Passage& b) {
    return a.leg == b.leg && a.seg == b.seg && a.t == b.t;
}

Rat param_on_segment(const Segment& s, const RatPoint& p) {
    const RatVec d = s.b - s.a;
    if (d.x == 0 && d.y == 0) throw DegenerateSegment("parameter on a degenerate segment");
    return rat_abs(d.x) >= rat_abs(d.y) ? (p.x - s.a.x) / d.x : (p.y - s.a.y) / d.y;
}

// Translations that re-embed a neighbouring fundamental domain over the
// chart box; segment pairs that only meet across an identified edge meet
// after one of these shifts. The first entry is always (0, 0).
static std::vector<RatVec> fold_offsets(const Chart& ch) {
    std::vector<Rat> xs = {Rat(0)}, ys = {Rat(0)};
    if (ch.wraps_x()) {
        xs.push_back(ch.width);
        xs.push_back(-ch.width);
    }
    if (ch.wraps_y()) {
        ys.push_back(ch.height);
        ys.push_back(-ch.height);
    }
    std::vector<RatVec> out;
    for (const Rat& x : xs)
        for (const Rat& y : ys) out.push_back({x, y});
    return out;
}

static Passage normalize_passage(const Curve& c, int leg, int seg, const Rat& t) {
    if (t == 1) {
        const int nseg = static_cast<int>(c.legs[static_cast<size_t>(leg)].pts.size()) - 1;
        if (seg + 1 < nseg) return {leg, seg + 1, Rat(0)};
        return {static_cast<int>((static_cast<size_t>(leg) + 1) % c.legs.size()), 0, Rat(0)};
    }
    return {leg, seg, t};
}

std::vector<RatPoint> reps_in_chart(const Surface& s, const CanonPoint& cp, int chart) {
    std::vector<RatPoint> out;
    const Chart& target = s.chart(chart);
    if (chart == cp.chart) {
        std::vector<Rat> xs = {cp.p.x}, ys = {cp.p.y};
        if (target.wraps_x() && cp.p.x == 0) xs.push_back(target.width);
        if (target.wraps_y() && cp.p.y == 0) ys.push_back(target.height);
        for (const Rat& x : xs)
            for (const Rat& y : ys) out.push_back({x, y});
        return out;
    }
    const Chart& own = s.chart(cp.chart);
    if (own.kind == ChartKind::HandleCylinder && target.kind != ChartKind::HandleCylinder) {
        for (size_t mi = 0; mi < s.mouths.size(); ++mi) {
            const Mouth& m = s.mouths[mi];
            if (m.handle_chart != cp.chart || m.base_chart != chart) continue;
            if (auto bp = handle_to_mouth(s, static_cast<int>(mi), cp.p)) out.push_back(*bp);
        }
    }
    return out;
}

std::vector<Passage> passages_at(const Surface& s, const Curve& c, const CanonPoint& cp) {
    std::set<Passage> seen;
    for (const CurveSeg& fs : curve_segments(c)) {
        for (const RatPoint& rep : reps_in_chart(s, cp, fs.chart)) {
            if (!on_segment(rep, fs.seg)) continue;
            seen.insert(normalize_passage(c, fs.leg_idx, fs.seg_idx, param_on_segment(fs.seg, rep)));
        }
    }
    return {seen.begin(), seen.end()};
}

// Points where a base-chart segment of c meets a mouth perimeter. These are
// the only places a curve can meet another curve that sits in the handle
// cylinder, so they seed the cross-chart search.
static std::vector<std::pair<CanonPoint, Passage>> perimeter_touches(const Surface& s,
                                                                     const Curve& c) {
    std::vector<std::pair<CanonPoint, Passage>> out;
    for (const CurveSeg& fs : curve_segments(c)) {
        if (s.chart(fs.chart).kind == ChartKind::HandleCylinder) continue;
        for (const Mouth& m : s.mouths) {
            if (m.base_chart != fs.chart) continue;
            const RatPoint bl{m.xmin(), m.ymin()}, br{m.xmax(), m.ymin()};
            const RatPoint tr{m.xmax(), m.ymax()}, tl{m.xmin(), m.ymax()};
            const Segment edges[4] = {{bl, br}, {br, tr}, {tr, tl}, {tl, bl}};
            for (const Segment& e : edges) {
                const SegIntersection r = segment_intersect(fs.seg, e);
                std::vector<RatPoint> hits;
                if (r.kind == SegIntersection::Point) hits.push_back(r.point);
                else if (r.kind == SegIntersection::Overlap) {
                    hits.push_back(r.ov_a);
                    hits.push_back(r.ov_b);
                }
                for (const RatPoint& p : hits)
                    out.emplace_back(canonical_point(s, fs.chart, p),
                                     normalize_passage(c, fs.leg_idx, fs.seg_idx,
                                                       param_on_segment(fs.seg, p)));
            }
        }
    }
    return out;
}

// Carries a direction given at a chart point into the chart of the canonical
// frame point. Wrap identifications are translations, so directions pass
// unchanged; mouth gluings rotate by the perimeter edge (and flip at the
// orientation-reversed end). Mouth corners are cone points of the piecewise
// structure and admit no single-chart transport.
static std::optional<RatVec> transport_dir(const Surface& s, int chart, const RatPoint& at,
                                           const RatVec& dir, const CanonPoint& frame) {
    if (chart == frame.chart) return dir;
    const Chart& ch = s.chart(chart);
    const Chart& fch = s.chart(frame.chart);
    if (ch.kind == ChartKind::HandleCylinder || fch.kind != ChartKind::HandleCylinder)
        return std::nullopt;
    for (const Mouth& m : s.mouths) {
        if (m.base_chart != chart || m.handle_chart != frame.chart) continue;
        if (!mouth_perimeter_param(m, at)) continue;
        const bool onb = at.y == m.ymin(), ont = at.y == m.ymax();
        const bool onl = at.x == m.xmin(), onr = at.x == m.xmax();
        if ((onb || ont) && (onl || onr)) return std::nullopt; // corner cone point
        RatVec v = dir;
        if (onr) v = {v.y, -v.x};       // right edge: rotate -90
        else if (ont) v = {-v.x, -v.y}; // top edge: rotate 180
        else if (onl) v = {-v.y, v.x};  // left edge: rotate +90
        if (m.handle_end == 1) v = {-v.x, -v.y};
        return v;
    }
    return std::nullopt;
}

// The two rays of one passage of c through the frame point, in frame
// coordinates; nullopt when transport fails.
static std::optional<std::array<RatVec, 2>> passage_rays(const Surface& s, const Curve& c,
                                                         const Passage& pos,
                                                         const CanonPoint& frame) {
    const Leg& leg = c.legs.at(static_cast<size_t>(pos.leg));
    const size_t si = static_cast<size_t>(pos.seg);
    if (pos.t != 0) {
        const RatPoint A = leg.pts[si], B = leg.pts[si + 1];
        const RatVec d = B - A;
        const RatPoint at = A + pos.t * d;
        auto fwd = transport_dir(s, leg.chart, at, d, frame);
        auto bwd = transport_dir(s, leg.chart, at, RatVec{-d.x, -d.y}, frame);
        if (!fwd || !bwd) return std::nullopt;
        return std::array<RatVec, 2>{*fwd, *bwd};
    }
    const RatPoint v = leg.pts[si];
    auto fwd = transport_dir(s, leg.chart, v, leg.pts[si + 1] - v, frame);
    std::optional<RatVec> bwd;
    if (pos.seg > 0) {
        bwd = transport_dir(s, leg.chart, v, leg.pts[si - 1] - v, frame);
    } else {
        const Leg& pl = c.legs[(static_cast<size_t>(pos.leg) + c.legs.size() - 1) % c.legs.size()];
        const RatPoint pe = pl.pts.back();
        bwd = transport_dir(s, pl.chart, pe, pl.pts[pl.pts.size() - 2] - pe, frame);
    }
    if (!fwd || !bwd) return std::nullopt;
    return std::array<RatVec, 2>{*fwd, *bwd};
}

static PointKind classify_point(const Surface& s, const Curve& a, const Curve& b,
                                const CanonPoint& cp, const Passage& pa, const Passage& pb) {
    auto ra = passage_rays(s, a, pa, cp);
    auto rb = passage_rays(s, b, pb, cp);
    if (!ra || !rb) return PointKind::Unclassified;
    try {
        const LocalKind k = classify_local(LocalStar{cp.p, *ra, *rb});
        return k == LocalKind::Crossing ? PointKind::Crossing : PointKind::Touching;
    } catch (const DegenerateStar&) {
        return PointKind::Unclassified;
    }
}

IntersectionReport intersection_report(const Surface& s, const Curve& a, const Curve& b) {
    IntersectionReport rep;
    struct Acc {
        std::set<Passage> on_a, on_b;
    };
    std::map<CanonPoint, Acc> acc;
    std::set<std::tuple<int, Rat, Rat, Rat, Rat>> ovseen;

    auto add_overlap = [&](int chart, RatPoint u, RatPoint v) {
        if (!point_less(u, v)) std::swap(u, v);
        if (ovseen.insert({chart, u.x, u.y, v.x, v.y}).second)
            rep.overlaps.push_back({chart, {u, v}});
        rep.infinite = true;
    };

    const auto segs_a = curve_segments(a), segs_b = curve_segments(b);

    // Same-chart coincidences, including across identified edges.
    for (const CurveSeg& fa : segs_a)
        for (const CurveSeg& fb : segs_b) {
            if (fa.chart != fb.chart) continue;
            for (const RatVec& off : fold_offsets(s.chart(fa.chart))) {
                const SegIntersection r =
                    segment_intersect(fa.seg, {fb.seg.a + off, fb.seg.b + off});
                if (r.kind == SegIntersection::Overlap) {
                    add_overlap(fa.chart, r.ov_a, r.ov_b);
                } else if (r.kind == SegIntersection::Point) {
                    Acc& e = acc[canonical_point(s, fa.chart, r.point)];
                    e.on_a.insert(normalize_passage(a, fa.leg_idx, fa.seg_idx,
                                                    param_on_segment(fa.seg, r.point)));
                    e.on_b.insert(normalize_passage(b, fb.leg_idx, fb.seg_idx,
                                                    param_on_segment(fb.seg, r.point - off)));
                }
            }
        }

    // Cross-chart coincidences live on mouth gluing circles: seed from each
    // curve's perimeter touches and look the point up on the other curve.
    for (const auto& [cp, pa] : perimeter_touches(s, a)) {
        const auto pb = passages_at(s, b, cp);
        if (pb.empty()) continue;
        Acc& e = acc[cp];
        e.on_a.insert(pa);
        for (const Passage& p : pb) e.on_b.insert(p);
        for (const Passage& p : passages_at(s, a, cp)) e.on_a.insert(p);
    }
    for (const auto& [cp, pb] : perimeter_touches(s, b)) {
        const auto pa = passages_at(s, a, cp);
        if (pa.empty()) continue;
        Acc& e = acc[cp];
        e.on_b.insert(pb);
        for (const Passage& p : pa) e.on_a.insert(p);
        for (const Passage& p : passages_at(s, b, cp)) e.on_b.insert(p);
    }

    for (auto& [cp, e] : acc) {
        IsectPoint pt;
        pt.at = cp;
        pt.on_a.assign(e.on_a.begin(), e.on_a.end());
        pt.on_b.assign(e.on_b.begin(), e.on_b.end());
        if (pt.on_a.size() == 1 && pt.on_b.size() == 1)
            pt.kind = classify_point(s, a, b, cp, pt.on_a[0], pt.on_b[0]);
        rep.points.push_back(std::move(pt));
    }
    std::sort(rep.points.begin(), rep.points.end(),
              [](const IsectPoint& p, const IsectPoint& q) {
                  return p.on_a.front() < q.on_a.front();
              });
    return rep;
}

bool is_embedded(const Surface& s, const Curve& c) {
    const auto segs = curve_segments(c);
    const size_t m = segs.size();
    std::map<CanonPoint, std::set<Passage>> at;

    // Every vertex is a passage; a leg's last point is the next leg's first.
    for (size_t li = 0; li < c.legs.size(); ++li) {
        const Leg& leg = c.legs[li];
        for (size_t k = 0; k + 1 < leg.pts.size(); ++k)
            at[canonical_point(s, leg.chart, leg.pts[k])].insert(
                Passage{static_cast<int>(li), static_cast<int>(k), Rat(0)});
    }

    for (size_t i = 0; i < m; ++i)
        for (size_t j = i; j < m; ++j) {
            if (segs[i].chart != segs[j].chart) continue;
            for (const RatVec& off : fold_offsets(s.chart(segs[i].chart))) {
                if (i == j && off.x == 0 && off.y == 0) continue;
                const SegIntersection r =
                    segment_intersect(segs[i].seg, {segs[j].seg.a + off, segs[j].seg.b + off});
                if (r.kind == SegIntersection::Overlap) return false;
                if (r.kind != SegIntersection::Point) continue;
                auto& keys = at[canonical_point(s, segs[i].chart, r.point)];
                keys.insert(normalize_passage(c, segs[i].leg_idx, segs[i].seg_idx,
                                              param_on_segment(segs[i].seg, r.point)));
                keys.insert(normalize_passage(c, segs[j].leg_idx, segs[j].seg_idx,
                                              param_on_segment(segs[j].seg, r.point - off)));
            }
        }

    // Self-meetings across a mouth gluing.
    for (const auto& [cp, pos] : perimeter_touches(s, c)) {
        auto& keys = at[cp];
        keys.insert(pos);
        for (const Passage& p : passages_at(s, c, cp)) keys.insert(p);
    }

    for (const auto& [cp, keys] : at)
        if (keys.size() > 1) return false;
    return true;
}

std::pair<Int, Int> torus_class(const Surface& s, const Curve& c) {
    Rat dx = 0, dy = 0;
    for (const Leg& leg : c.legs) {
        if (s.chart(leg.chart).kind == ChartKind::HandleCylinder)
            throw NotBaseChartCurve("curve " + std::to_string(c.label) +
                                    " traverses a handle cylinder");
        dx += leg.pts.back().x - leg.pts.front().x;
        dy += leg.pts.back().y - leg.pts.front().y;
    }
    const Chart& ch = s.chart(c.legs.front().chart);
    const Rat px = dx / ch.width, qy = dy / ch.height;
    if (denominator(px) != 1 || denominator(qy) != 1)
        throw OpenCurve("curve walk displacement is not a lattice vector");
    return {numerator(px), numerator(qy)};
}

bool is_contained_in_union(const Surface& s, const Curve& c, const std::vector<Curve>& cover) {
    for (const CurveSeg& fs : curve_segments(c)) {
        const Chart& ch = s.chart(fs.chart);
        std::vector<std::pair<Rat, Rat>> iv;
        for (const Curve& u : cover)
            for (const CurveSeg& gs : curve_segments(u)) {
                if (gs.chart != fs.chart) continue;
                for (const RatVec& off : fold_offsets(ch)) {
                    const SegIntersection r =
                        segment_intersect(fs.seg, {gs.seg.a + off, gs.seg.b + off});
                    if (r.kind != SegIntersection::Overlap) continue;
                    Rat t0 = param_on_segment(fs.seg, r.ov_a);
                    Rat t1 = param_on_segment(fs.seg, r.ov_b);
                    if (t0 > t1) std::swap(t0, t1);
                    iv.emplace_back(t0, t1);
                }
            }
        std::sort(iv.begin(), iv.end());
        Rat covered = 0;
        for (const auto& [lo, hi] : iv) {
            if (lo > covered) return false;
            covered = std::max(covered, hi);
        }
        if (covered < 1) return false;
    }
    return true;
}

RatPoint passage_point(const Curve& c, const Passage& p) {
    const Leg& leg = c.legs[static_cast<size_t>(p.leg)];
    const RatPoint& a = leg.pts[static_cast<size_t>(p.seg)];
    const RatPoint& b = leg.pts[static_cast<size_t>(p.seg) + 1];
    return a + p.t * (b - a);
}

std::vector<Leg> arc_between(const Curve& c, const Passage& from, const Passage& to) {
    if (from == to) throw InvalidSpec("arc endpoints coincide");
    std::vector<Leg> out;
    Leg cur;
    cur.chart = c.legs[static_cast<size_t>(from.leg)].chart;
    cur.pts.push_back(passage_point(c, from));
    int leg = from.leg, seg = from.seg;
    Rat t = from.t;
    const auto total_steps = [&c]() {
        std::size_t n = 0;
        for (const Leg& l : c.legs) n += l.pts.size();
        return n + 2;
    }();
    for (std::size_t guard = 0; guard <= 2 * total_steps; ++guard) {
        const Leg& L = c.legs[static_cast<size_t>(leg)];
        const int nseg = static_cast<int>(L.pts.size()) - 1;
        if (to.leg == leg && to.seg == seg && to.t > t) {
            const RatPoint end = passage_point(c, to);
            if (end != cur.pts.back()) cur.pts.push_back(end);
            out.push_back(cur);
            return out;
        }
        // Advance to the next vertex of the leg.
        const RatPoint v = L.pts[static_cast<size_t>(seg) + 1];
        if (seg + 1 < nseg) {
            if (v != cur.pts.back()) cur.pts.push_back(v);
            seg += 1;
            t = 0;
        } else {
            if (v != cur.pts.back()) cur.pts.push_back(v);
            const int nleg = static_cast<int>((static_cast<size_t>(leg) + 1) % c.legs.size());
            const Leg& NL = c.legs[static_cast<size_t>(nleg)];
            out.push_back(cur);
            cur = Leg{NL.chart, {NL.pts.front()}};
            leg = nleg;
            seg = 0;
            t = 0;
        }
        if (to.leg == leg && to.seg == seg && to.t == t) {
            out.push_back(cur);
            return out;
        }
    }
    throw InvalidSpec("arc walk did not terminate");
}

bool passage_strictly_between(const Passage& from, const Passage& q, const Passage& to) {
    if (q == from || q == to) return false;
    if (from < to) return from < q && q < to;
    // The forward walk wraps past the storage origin.
    return from < q || q < to;
}

} // namespace finecurves
