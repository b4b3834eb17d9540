#include <algorithm>
#include <optional>

#include "finecurves/errors.hpp"
#include "finecurves/surgeries.hpp"

namespace finecurves {

namespace {

Rat cheb(const RatVec& d) { return std::max(rat_abs(d.x), rat_abs(d.y)); }

// Normal of length 1 in the Chebyshev sense, pointing left of travel.
RatVec cheb_normal(const RatVec& d) {
    const Rat m = cheb(d);
    return {-d.y / m, d.x / m};
}

RatPoint line_meet(const RatPoint& p1, const RatVec& d1, const RatPoint& p2,
                   const RatVec& d2) {
    const Rat s = cross(p2 - p1, d2) / cross(d1, d2);
    return p1 + s * d1;
}

void dedup(std::vector<RatPoint>& pts) {
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

// Offset of an open lifted chain by miter joints; empty on a doubling-back
// turn. side +1 pushes along the left normal of travel, -1 right.
std::vector<RatPoint> offset_chain(const std::vector<RatPoint>& c, const Rat& delta,
                                   int side) {
    const std::size_t n = c.size();
    std::vector<RatPoint> out;
    if (n < 2) return out;
    auto off = [&](const RatVec& d) { return (Rat(side) * delta) * cheb_normal(d); };
    out.push_back(c[0] + off(c[1] - c[0]));
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const RatVec d1 = c[i] - c[i - 1], d2 = c[i + 1] - c[i];
        const Rat cr = cross(d1, d2);
        if (cr == 0) {
            if (dot(d1, d2) <= 0) return {};
            out.push_back(c[i] + off(d2));
        } else {
            out.push_back(line_meet(c[i] + off(d1), d1, c[i] + off(d2), d2));
        }
    }
    out.push_back(c[n - 1] + off(c[n - 1] - c[n - 2]));
    return out;
}

// Offset of a closed lifted chain c0..cM with cM = c0 + period.
std::vector<RatPoint> offset_closed(const std::vector<RatPoint>& c, const Rat& delta,
                                    int side) {
    if (c.size() < 2) return {};
    const std::size_t m = c.size() - 1;
    const RatVec period = c[m] - c[0];
    auto off = [&](const RatVec& d) { return (Rat(side) * delta) * cheb_normal(d); };
    std::vector<RatPoint> out;
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t prev = i == 0 ? m - 1 : i - 1;
        const RatVec d1 = c[prev + 1] - c[prev];
        const RatVec d2 = c[i + 1] - c[i];
        const Rat cr = cross(d1, d2);
        if (cr == 0) {
            if (dot(d1, d2) <= 0) return {};
            out.push_back(c[i] + off(d2));
        } else {
            out.push_back(line_meet(c[i] + off(d1), d1, c[i] + off(d2), d2));
        }
    }
    out.push_back(out.front() + period);
    return out;
}

// Flat segment index of a passage within the curve's lifted chain.
long long seg_index(const Curve& c, const Passage& p) {
    long long base = 0;
    for (int li = 0; li < p.leg; ++li)
        base += static_cast<long long>(c.legs[li].pts.size()) - 1;
    return base + p.seg;
}

// Closed lifted chain with unwrapped (periodic) vertex access.
struct CycLift {
    std::vector<RatPoint> pts; // p0..pm with pm = p0 + period
    RatVec period;

    long long segs() const { return static_cast<long long>(pts.size()) - 1; }
    RatPoint at(long long i) const {
        const long long m = segs();
        long long q = i / m, r = i % m;
        if (r < 0) {
            r += m;
            --q;
        }
        const RatPoint& p = pts[static_cast<std::size_t>(r)];
        return {p.x + q * period.x, p.y + q * period.y};
    }
    RatPoint on_seg(long long i, const Rat& t) const {
        const RatPoint a = at(i), b = at(i + 1);
        return a + t * (b - a);
    }
};

CycLift make_lift(const Surface& s, const Curve& c) {
    CycLift l;
    l.pts = lift_closed(s, c);
    l.period = l.pts.back() - l.pts.front();
    return l;
}

// Earliest parameter in (0,1] where the segment a->b, starting strictly
// inside the L-infinity box of radius r around ctr, reaches the boundary.
std::optional<Rat> box_exit(const RatPoint& a, const RatPoint& b, const RatPoint& ctr,
                            const Rat& r) {
    std::optional<Rat> best;
    const RatVec d = b - a;
    auto consider = [&](const Rat& s) {
        if (s <= 0 || s > 1) return;
        if (cheb(a + s * d - ctr) != r) return;
        if (!best || s < *best) best = s;
    };
    if (d.x != 0) {
        consider((ctr.x + r - a.x) / d.x);
        consider((ctr.x - r - a.x) / d.x);
    }
    if (d.y != 0) {
        consider((ctr.y + r - a.y) / d.y);
        consider((ctr.y - r - a.y) / d.y);
    }
    return best;
}

struct Anchor {
    RatPoint pt;   // lift coordinates
    long long seg; // unwrapped segment index the anchor lies on
};

// First point along the curve, walking from (seg0, t0) in direction dir
// (+1 forward, -1 backward), at L-infinity distance r from ctr.
std::optional<Anchor> walk_to_box(const CycLift& l, long long seg0, const Rat& t0,
                                  const RatPoint& ctr, const Rat& r, int dir) {
    RatPoint cur = l.on_seg(seg0, t0);
    if (cheb(cur - ctr) >= r) return std::nullopt;
    long long seg = seg0;
    for (long long steps = 0; steps <= l.segs() + 1; ++steps) {
        const RatPoint tgt = dir > 0 ? l.at(seg + 1) : l.at(seg);
        if (!(tgt == cur)) {
            if (auto s = box_exit(cur, tgt, ctr, r))
                return Anchor{cur + *s * (tgt - cur), seg};
            if (cheb(tgt - ctr) >= r) return std::nullopt;
        }
        cur = tgt;
        seg += dir;
    }
    return std::nullopt; // r spans the whole curve
}

// New closed chain: the kept part of the curve from anchor `t` forward to
// anchor `f` one period later, then the replacement path, which must start at
// f.pt + period and end at t.pt + period.
std::vector<RatPoint> splice(const CycLift& l, const Anchor& f, const Anchor& t,
                             const std::vector<RatPoint>& repl) {
    std::vector<RatPoint> chain;
    chain.push_back(t.pt);
    for (long long i = t.seg + 1; i <= f.seg + l.segs(); ++i) chain.push_back(l.at(i));
    for (const RatPoint& p : repl) chain.push_back(p);
    dedup(chain);
    return chain;
}

int base_chart_of(const Curve& c) { return c.legs.front().chart; }

int fresh_label(const CurveSystem& sys) {
    int mx = -1;
    for (const Curve& c : sys.curves) mx = std::max(mx, c.label);
    return mx + 1;
}

Curve chain_to_curve(const Surface& s, int chart_idx, int label,
                     std::vector<RatPoint> chain) {
    dedup(chain);
    Curve cv;
    cv.label = label;
    cv.legs = legs_from_lifted(s.chart(chart_idx), chart_idx, chain).first;
    return cv;
}

// Point-set signature of a report: canonical points with their kinds.
struct PointSig {
    CanonPoint at;
    int kind;
    bool operator<(const PointSig& o) const {
        if (!(at == o.at)) return at < o.at;
        return kind < o.kind;
    }
    bool operator==(const PointSig& o) const { return at == o.at && kind == o.kind; }
};

std::vector<PointSig> report_sig(const IntersectionReport& r) {
    std::vector<PointSig> v;
    for (const auto& pt : r.points) v.push_back({pt.at, static_cast<int>(pt.kind)});
    std::sort(v.begin(), v.end());
    return v;
}

bool same_reports(const IntersectionReport& x, const IntersectionReport& y) {
    return x.infinite == y.infinite && report_sig(x) == report_sig(y);
}

// Reports of the named curve against every other curve except `skip`.
std::vector<std::pair<int, IntersectionReport>> third_reports(const CurveSystem& sys,
                                                              int a, int skip) {
    std::vector<std::pair<int, IntersectionReport>> out;
    const Curve& A = sys.curve_by_label(a);
    for (const Curve& z : sys.curves)
        if (z.label != a && z.label != skip)
            out.push_back({z.label, intersection_report(sys.surface, A, z)});
    return out;
}

bool thirds_unchanged(const CurveSystem& sys, const Curve& cand,
                      const std::vector<std::pair<int, IntersectionReport>>& thirds) {
    for (const auto& [zl, old] : thirds)
        if (!same_reports(intersection_report(sys.surface, cand, sys.curve_by_label(zl)), old))
            return false;
    return true;
}

bool curve_ok(const Surface& s, const Curve& c) {
    try {
        validate_curve(s, c);
    } catch (const Error&) {
        return false;
    }
    return is_embedded(s, c);
}

void push_step(SurgeryTrace* trace, const std::string& move, int chart,
               const std::vector<RatPoint>& region, std::size_t before,
               std::size_t after) {
    if (!trace || region.empty()) return;
    SurgeryStep st;
    st.move = move;
    st.chart = chart;
    st.region_lo = st.region_hi = region.front();
    for (const RatPoint& p : region) {
        st.region_lo.x = std::min(st.region_lo.x, p.x);
        st.region_lo.y = std::min(st.region_lo.y, p.y);
        st.region_hi.x = std::max(st.region_hi.x, p.x);
        st.region_hi.y = std::max(st.region_hi.y, p.y);
    }
    st.before = before;
    st.after = after;
    trace->steps.push_back(st);
}

// Parallel copy of A disjoint from A and from every curve in `avoid`.
std::optional<Curve> clear_pushoff(const CurveSystem& sys, const Curve& A,
                                   const std::vector<const Curve*>& avoid, int label) {
    const CycLift lift = make_lift(sys.surface, A);
    Rat delta(1, 32);
    for (int iter = 0; iter < 14; ++iter, delta = delta / 2) {
        for (int side : {-1, 1}) {
            const auto chain = offset_closed(lift.pts, delta, side);
            if (chain.empty()) continue;
            Curve cand;
            try {
                cand = chain_to_curve(sys.surface, base_chart_of(A), label, chain);
            } catch (const Error&) {
                continue;
            }
            if (!curve_ok(sys.surface, cand)) continue;
            bool clear = intersection_report(sys.surface, A, cand).disjoint();
            for (const Curve* z : avoid)
                clear = clear && intersection_report(sys.surface, *z, cand).disjoint();
            if (clear) return cand;
        }
    }
    return std::nullopt;
}

} // namespace

Curve pushoff(const CurveSystem& sys, int a, const Rat& offset, SurgeryTrace* trace) {
    if (offset <= 0) throw OffsetTooLarge("offset must be positive");
    const Curve& A = sys.curve_by_label(a);
    const CycLift lift = make_lift(sys.surface, A);
    for (int side : {-1, 1}) {
        const auto chain = offset_closed(lift.pts, offset, side);
        if (chain.empty()) continue;
        Curve cand;
        try {
            cand = chain_to_curve(sys.surface, base_chart_of(A), fresh_label(sys), chain);
        } catch (const Error&) {
            continue;
        }
        if (!curve_ok(sys.surface, cand)) continue;
        if (!intersection_report(sys.surface, A, cand).disjoint()) continue;
        push_step(trace, "pushoff", base_chart_of(A), chain, 0, 0);
        return cand;
    }
    throw OffsetTooLarge("offset " + rat_to_string(offset) +
                         " exceeds the clearance of curve " + std::to_string(a));
}

Curve remove_touching(const CurveSystem& sys, int a, int b, const CanonPoint& point,
                      SurgeryTrace* trace) {
    const Curve& A = sys.curve_by_label(a);
    const Curve& B = sys.curve_by_label(b);
    const Surface& S = sys.surface;
    const IntersectionReport rep = intersection_report(S, A, B);
    const IsectPoint* hit = nullptr;
    for (const auto& pt : rep.points)
        if (pt.at == point) {
            hit = &pt;
            break;
        }
    if (!hit || hit->kind != PointKind::Touching)
        throw NotTouching("the given point is not a touching point of the pair");
    if (hit->on_a.size() != 1 || hit->on_b.size() != 1)
        throw NotTouching("a curve passes the point more than once");

    const auto thirds = third_reports(sys, a, b);
    const CycLift lift = make_lift(S, A);
    const long long gsi = seg_index(A, hit->on_a[0]);
    const RatPoint P = lift.on_seg(gsi, hit->on_a[0].t);

    std::vector<PointSig> want = report_sig(rep);
    want.erase(std::remove(want.begin(), want.end(),
                           PointSig{hit->at, static_cast<int>(PointKind::Touching)}),
               want.end());

    Rat r(1, 8);
    for (int shrink = 0; shrink < 20; ++shrink, r = r / 2) {
        const auto F = walk_to_box(lift, gsi, hit->on_a[0].t, P, r, -1);
        const auto T = walk_to_box(lift, gsi, hit->on_a[0].t, P, r, +1);
        if (!F || !T) continue;
        const RatVec chord = T->pt - F->pt;
        if (chord.x == 0 && chord.y == 0) continue;
        for (int side : {-1, 1}) {
            const RatVec bump = (Rat(side) * (r / 4)) * cheb_normal(chord);
            const RatPoint Fp = F->pt + lift.period, Tp = T->pt + lift.period;
            const std::vector<RatPoint> repl = {Fp, Fp + bump, Tp + bump, Tp};
            Curve cand;
            try {
                cand = chain_to_curve(S, base_chart_of(A), a, splice(lift, *F, *T, repl));
            } catch (const Error&) {
                continue;
            }
            if (!curve_ok(S, cand)) continue;
            const IntersectionReport rep2 = intersection_report(S, cand, B);
            if (rep2.infinite || report_sig(rep2) != want) continue;
            if (!thirds_unchanged(sys, cand, thirds)) continue;
            push_step(trace, "remove-touching", point.chart,
                      {P - RatPoint{r, r}, P + RatPoint{r, r}}, rep.count(), rep2.count());
            return cand;
        }
    }
    throw OffsetExhausted("no neighborhood isolates the touching point");
}

Curve remove_innermost_bigon(const CurveSystem& sys, int a, int b, const Bigon& bigon,
                             SurgeryTrace* trace) {
    const Curve& A = sys.curve_by_label(a);
    const Curve& B = sys.curve_by_label(b);
    const Surface& S = sys.surface;
    const Bigon* match = nullptr;
    const auto bigons = find_bigons(sys, a, b);
    for (const auto& bg : bigons)
        if (bg.a_from == bigon.a_from && bg.a_to == bigon.a_to) {
            match = &bg;
            break;
        }
    if (!match || !match->innermost)
        throw NotInnermost("the given bigon is not an innermost bigon of the pair");

    const IntersectionReport rep = intersection_report(S, A, B);
    const auto thirds = third_reports(sys, a, b);
    const CycLift lift = make_lift(S, A);

    const long long g1 = seg_index(A, match->a_from);
    long long g2 = seg_index(A, match->a_to);
    const Rat t1 = match->a_from.t, t2 = match->a_to.t;
    if (g2 < g1 || (g2 == g1 && !(t1 < t2))) g2 += lift.segs();
    const RatPoint P1 = lift.on_seg(g1, t1);
    const RatPoint P2 = lift.on_seg(g2, t2);

    // The b-arc traversed from corner 1 to corner 2, in a's lift frame.
    std::vector<RatPoint> beta = lift_leg_chain(S, reversed_legs(match->arc_b));
    const RatVec dv = P1 - beta.front();
    for (auto& p : beta) p = p + dv;
    dedup(beta);
    if (!(beta.back() == P2))
        throw NotInnermost("bigon arcs do not close"); // unreachable for find_bigons output

    std::vector<PointSig> want = report_sig(rep);
    for (const auto& pt : rep.points)
        if ((pt.on_a[0] == match->a_from) || (pt.on_a[0] == match->a_to))
            want.erase(std::remove(want.begin(), want.end(),
                                   PointSig{pt.at, static_cast<int>(pt.kind)}),
                       want.end());

    Rat r(1, 32);
    for (int shrink = 0; shrink < 18; ++shrink, r = r / 2) {
        const auto F = walk_to_box(lift, g1, t1, P1, r, -1);
        const auto T = walk_to_box(lift, g2, t2, P2, r, +1);
        if (!F || !T) continue;
        if (T->seg < F->seg) continue; // box swallowed the whole a-arc
        for (int side : {-1, 1}) {
            const auto bo = offset_chain(beta, r / 2, side);
            if (bo.empty()) continue;
            std::vector<RatPoint> repl;
            repl.push_back(F->pt + lift.period);
            for (const RatPoint& p : bo) repl.push_back(p + lift.period);
            repl.push_back(T->pt + lift.period);
            Curve cand;
            try {
                cand = chain_to_curve(S, base_chart_of(A), a, splice(lift, *F, *T, repl));
            } catch (const Error&) {
                continue;
            }
            if (!curve_ok(S, cand)) continue;
            const IntersectionReport rep2 = intersection_report(S, cand, B);
            if (rep2.infinite || report_sig(rep2) != want) continue;
            if (!thirds_unchanged(sys, cand, thirds)) continue;
            push_step(trace, "remove-bigon", base_chart_of(A), beta, rep.count(),
                      rep2.count());
            return cand;
        }
    }
    throw OffsetExhausted("no offset reroutes the bigon cleanly");
}

std::vector<Curve> surgery_path(const CurveSystem& sys, int u, int v, int k,
                                SurgeryTrace* trace) {
    if (k < 0) throw WrongIntersectionCount("k must be non-negative");
    const Curve& U = sys.curve_by_label(u);
    const Curve& V = sys.curve_by_label(v);
    const Surface& S = sys.surface;
    const IntersectionReport rep = intersection_report(S, U, V);
    if (rep.infinite) throw InfiniteIntersection("the pair shares a subsegment");
    if (rep.count() != static_cast<std::size_t>(k) + 1)
        throw WrongIntersectionCount("expected k+1 = " + std::to_string(k + 1) +
                                     " meeting points, found " +
                                     std::to_string(rep.count()));

    // Case 1: remove a touching point; case 2: remove an innermost bigon.
    // Both give the path u, pushoff of u, modified u, v.
    Curve uprime;
    bool have_uprime = false;
    for (const auto& pt : rep.points)
        if (pt.kind == PointKind::Touching) {
            uprime = remove_touching(sys, u, v, pt.at, trace);
            have_uprime = true;
            break;
        }
    if (!have_uprime) {
        for (const auto& bg : find_bigons(sys, u, v))
            if (bg.innermost) {
                uprime = remove_innermost_bigon(sys, u, v, bg, trace);
                have_uprime = true;
                break;
            }
    }
    if (have_uprime) {
        const int fl = fresh_label(sys);
        uprime.label = fl + 1;
        const auto udouble = clear_pushoff(sys, U, {&uprime}, fl);
        if (!udouble) throw OffsetExhausted("no pushoff separates the modified curve");
        return {U, *udouble, uprime, V};
    }

    // Case 3: arc surgery at a crossing. A once-crossing pair on these
    // surfaces only yields candidates whose class meets u or v again, so the
    // search is over before it starts.
    if (k == 0)
        throw NoEssentialSurgery(
            "every curve surgered from a once-crossing pair re-crosses an endpoint");

    std::vector<const IsectPoint*> byv;
    for (const auto& pt : rep.points) byv.push_back(&pt);
    std::sort(byv.begin(), byv.end(), [](const IsectPoint* x, const IsectPoint* y) {
        return x->on_b[0] < y->on_b[0];
    });

    const int wl = fresh_label(sys);
    for (std::size_t i = 0; i < byv.size(); ++i) {
        const IsectPoint* P = byv[i];
        const IsectPoint* Q = byv[(i + 1) % byv.size()];
        std::vector<RatPoint> beta = lift_leg_chain(S, arc_between(V, P->on_b[0], Q->on_b[0]));
        for (int arc_choice = 0; arc_choice < 2; ++arc_choice) {
            const Passage& pu = arc_choice == 0 ? P->on_a[0] : Q->on_a[0];
            const Passage& qu = arc_choice == 0 ? Q->on_a[0] : P->on_a[0];
            std::vector<RatPoint> mu = lift_leg_chain(S, arc_between(U, pu, qu));
            // Loop: the u-arc, then the v-arc traversed back to the start.
            std::vector<RatPoint> loop = mu;
            std::vector<RatPoint> br = beta;
            if (arc_choice == 0) std::reverse(br.begin(), br.end());
            const RatVec shift = loop.back() - br.front();
            for (std::size_t j = 1; j < br.size(); ++j) loop.push_back(br[j] + shift);
            dedup(loop);
            const RatVec cls = loop.back() - loop.front();
            if (cls.x == 0 && cls.y == 0) continue; // contractible candidate
            Rat delta(1, 64);
            for (int iter = 0; iter < 10; ++iter, delta = delta / 2) {
                for (int side : {-1, 1}) {
                    const auto chain = offset_closed(loop, delta, side);
                    if (chain.empty()) continue;
                    Curve cand;
                    try {
                        cand = chain_to_curve(S, base_chart_of(U), wl, chain);
                    } catch (const Error&) {
                        continue;
                    }
                    if (!curve_ok(S, cand)) continue;
                    const auto ru = intersection_report(S, cand, U);
                    const auto rv = intersection_report(S, cand, V);
                    if (ru.infinite || rv.infinite) continue;
                    if (ru.count() > static_cast<std::size_t>(k) ||
                        rv.count() > static_cast<std::size_t>(k))
                        continue;
                    push_step(trace, "arc-surgery", base_chart_of(U), loop, rep.count(),
                              rv.count());
                    return {U, cand, V};
                }
            }
        }
    }
    throw NoEssentialSurgery("all surgered candidates fail the k-bound or essentiality");
}

Curve distance2_witness(const CurveSystem& sys, int a, int b, SurgeryTrace* trace) {
    const Curve& A = sys.curve_by_label(a);
    const Curve& B = sys.curve_by_label(b);
    const Surface& S = sys.surface;
    const CycLift lift = make_lift(S, A);
    const int label = fresh_label(sys);
    Rat delta(1, 16);
    for (int iter = 0; iter < 18; ++iter, delta = delta / 2) {
        for (int side : {-1, 1}) {
            const auto chain = offset_closed(lift.pts, delta, side);
            if (chain.empty()) continue;
            Curve cand;
            try {
                cand = chain_to_curve(S, base_chart_of(A), label, chain);
            } catch (const Error&) {
                continue;
            }
            if (!curve_ok(S, cand)) continue;
            if (!intersection_report(S, A, cand).disjoint()) continue;

            // Perturb away residual touching points against b, one at a time.
            CurveSystem tmp = sys;
            tmp.curves.push_back(cand);
            bool good = true;
            for (int guard = 0; guard < 64; ++guard) {
                const IntersectionReport rcb = intersection_report(S, cand, B);
                if (rcb.infinite) {
                    good = false;
                    break;
                }
                const IsectPoint* tpt = nullptr;
                for (const auto& pt : rcb.points)
                    if (pt.kind != PointKind::Crossing) {
                        tpt = &pt;
                        break;
                    }
                if (!tpt) break;
                if (tpt->kind != PointKind::Touching) {
                    good = false;
                    break;
                }
                try {
                    cand = remove_touching(tmp, label, b, tpt->at, trace);
                } catch (const Error&) {
                    good = false;
                    break;
                }
                tmp.curve_by_label(label) = cand;
            }
            if (!good) continue;
            const IntersectionReport fin = intersection_report(S, cand, B);
            bool all_cross = !fin.infinite;
            for (const auto& pt : fin.points)
                all_cross = all_cross && pt.kind == PointKind::Crossing;
            if (!all_cross) continue;
            if (!intersection_report(S, A, cand).disjoint()) continue;
            push_step(trace, "distance2-witness", base_chart_of(A), chain, 0,
                      fin.count());
            return cand;
        }
    }
    throw OffsetExhausted("no pushoff of the first curve meets the second cleanly");
}

} // namespace finecurves
