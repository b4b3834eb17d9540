#include "finecurves/verifier.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace finecurves {

std::string semantics_name(const AdjacencySpec& sem) {
    switch (sem.kind) {
    case Semantics::Fine: return "fine";
    case Semantics::Finitary: return "finitary";
    case Semantics::KFine: return "k=" + std::to_string(sem.k);
    }
    throw InvalidSpec("unknown semantics");
}

AdjacencySpec parse_semantics(const std::string& text) {
    if (text == "fine") return {Semantics::Fine, 2};
    if (text == "finitary") return {Semantics::Finitary, 2};
    if (text.rfind("k=", 0) == 0) {
        int k = 0;
        try {
            std::size_t used = 0;
            k = std::stoi(text.substr(2), &used);
            if (used != text.size() - 2) throw std::invalid_argument(text);
        } catch (const std::exception&) {
            throw ParseError("bad semantics '" + text + "'");
        }
        if (k < 1) throw InvalidSpec("k must be at least 1");
        return {Semantics::KFine, k};
    }
    throw ParseError("bad semantics '" + text + "' (want fine, finitary, or k=<int>)");
}

const PairData& PatternResult::pair(int la, int lb) const {
    if (la > lb) std::swap(la, lb);
    for (const PairData& p : pairs)
        if (p.a == la && p.b == lb) return p;
    throw UnknownLabel("pair " + std::to_string(la) + "," + std::to_string(lb));
}

static bool adjacent_under(const AdjacencySpec& sem, const IntersectionReport& rep) {
    if (rep.infinite) return false;
    switch (sem.kind) {
    case Semantics::Fine: return rep.points.empty();
    case Semantics::KFine: return rep.points.size() <= static_cast<std::size_t>(sem.k);
    case Semantics::Finitary: return true;
    }
    throw InvalidSpec("unknown semantics");
}

PatternResult induced_pattern(const CurveSystem& sys, const AdjacencySpec& sem) {
    PatternResult out;
    for (const Curve& c : sys.curves) out.labels.push_back(c.label);
    std::sort(out.labels.begin(), out.labels.end());
    const int n = static_cast<int>(out.labels.size());
    out.graph = SimpleGraph(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const Curve& ca = sys.curve_by_label(out.labels[i]);
            const Curve& cb = sys.curve_by_label(out.labels[j]);
            const IntersectionReport rep = intersection_report(sys.surface, ca, cb);
            if (rep.infinite && is_contained_in_union(sys.surface, ca, {cb}) &&
                is_contained_in_union(sys.surface, cb, {ca}))
                throw DuplicateCurve("curves " + std::to_string(ca.label) + " and " +
                                     std::to_string(cb.label) + " have the same image");
            PairData pd;
            pd.a = out.labels[i];
            pd.b = out.labels[j];
            pd.infinite = rep.infinite;
            pd.points = rep.points.size();
            pd.all_crossing = std::all_of(rep.points.begin(), rep.points.end(),
                                          [](const IsectPoint& p) {
                                              return p.kind == PointKind::Crossing;
                                          });
            pd.adjacent = adjacent_under(sem, rep);
            if (pd.adjacent) out.graph.set_edge(i, j);
            out.pairs.push_back(pd);
        }
    }
    return out;
}

static bool curve_is_base_chart(const Surface& s, const Curve& c) {
    for (const Leg& l : c.legs)
        if (s.chart(l.chart).kind == ChartKind::HandleCylinder) return false;
    return true;
}

CheckReport check_certificate(const Certificate& cert) {
    CheckReport rep;
    validate_system(cert.system);
    if (cert.system.surface.kind != parse_surface_kind(cert.surface_kind) ||
        cert.system.surface.param != cert.surface_param)
        throw MalformedCertificate("surface fields do not match the system surface");
    const int n = cert.claimed.n;
    if (static_cast<int>(cert.system.curves.size()) != n)
        throw MalformedCertificate("curve count differs from the claimed vertex count");
    for (int v = 0; v < n; ++v)
        if (!cert.system.has_label(v))
            throw MalformedCertificate("missing curve for vertex " + std::to_string(v));

    auto curve_failure = [&rep](int label, const std::string& why) {
        rep.detail += "curve " + std::to_string(label) + " " + why + "; ";
        Mismatch mm;
        mm.a = mm.b = label;
        mm.got.a = mm.got.b = label;
        mm.note = why;
        rep.mismatches.push_back(std::move(mm));
    };

    rep.embedded_ok = true;
    for (const Curve& c : cert.system.curves) {
        if (!is_embedded(cert.system.surface, c)) {
            rep.embedded_ok = false;
            curve_failure(c.label, "is not embedded");
        }
    }

    rep.essential_ok = true;
    for (const Curve& c : cert.system.curves) {
        if (curve_is_base_chart(cert.system.surface, c)) {
            const auto cls = torus_class(cert.system.surface, c);
            if (cls.first == 0 && cls.second == 0) {
                rep.essential_ok = false;
                curve_failure(c.label, "is null-homotopic");
            }
        } else if (!c.essential_certified) {
            rep.essential_ok = false;
            curve_failure(c.label, "traverses a handle without an essential certificate");
        }
    }

    rep.pattern = induced_pattern(cert.system, cert.semantics);
    rep.pattern_ok = true;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const bool want = cert.claimed.edge(i, j);
            const PairData& got = rep.pattern.pair(rep.pattern.labels[i], rep.pattern.labels[j]);
            if (got.adjacent != want) {
                rep.pattern_ok = false;
                rep.mismatches.push_back({got.a, got.b, want, got, {}});
            }
        }
    }
    rep.ok = rep.embedded_ok && rep.essential_ok && rep.pattern_ok;
    return rep;
}

std::vector<RatPoint> lift_leg_chain(const Surface& s, const std::vector<Leg>& legs) {
    if (legs.empty()) throw EmptyLeg("empty leg chain");
    for (const Leg& l : legs)
        if (s.chart(l.chart).kind == ChartKind::HandleCylinder)
            throw NotBaseChartCurve("leg chain traverses a handle chart");
    std::vector<RatPoint> lifted;
    for (const RatPoint& p : legs.front().pts)
        if (lifted.empty() || p != lifted.back()) lifted.push_back(p);
    for (std::size_t li = 1; li < legs.size(); ++li) {
        const Leg& leg = legs[li];
        const RatVec off = lifted.back() - leg.pts.front();
        for (std::size_t k = 1; k < leg.pts.size(); ++k) {
            const RatPoint q = leg.pts[k] + off;
            if (q != lifted.back()) lifted.push_back(q);
        }
    }
    return lifted;
}

namespace {

struct PairContext {
    const Surface* surface = nullptr;
    const Curve* a = nullptr;
    const Curve* b = nullptr;
    std::vector<IsectPoint> points; // sorted along a, one passage per curve
};

PairContext prepare_transversal_pair(const CurveSystem& sys, int a, int b) {
    PairContext ctx;
    ctx.surface = &sys.surface;
    ctx.a = &sys.curve_by_label(a);
    ctx.b = &sys.curve_by_label(b);
    if (!curve_is_base_chart(sys.surface, *ctx.a) || !curve_is_base_chart(sys.surface, *ctx.b))
        throw NotSupported("pair analysis requires base-chart curves");
    if (!is_embedded(sys.surface, *ctx.a) || !is_embedded(sys.surface, *ctx.b))
        throw NotSupported("pair analysis requires embedded curves");
    IntersectionReport rep = intersection_report(sys.surface, *ctx.a, *ctx.b);
    if (rep.infinite) throw NotSupported("pair analysis requires finitely many meeting points");
    for (const IsectPoint& p : rep.points) {
        if (p.kind != PointKind::Crossing)
            throw NotSupported("pair analysis requires crossing-only intersections");
        if (p.on_a.size() != 1 || p.on_b.size() != 1)
            throw NotSupported("pair analysis requires one passage per curve per point");
    }
    ctx.points = std::move(rep.points);
    return ctx;
}

// Lattice translates of `what` whose bounding box meets the bounding box of
// the lifted loop; (0,0) is included when boxes meet untranslated.
std::vector<RatVec> box_translates(const Chart& chart, const RatPoint& lo, const RatPoint& hi,
                                   const RatPoint& wlo, const RatPoint& whi) {
    std::vector<RatVec> out;
    auto range = [](const Rat& lo1, const Rat& hi1, const Rat& lo2, const Rat& hi2,
                    const Rat& unit, bool wraps, std::vector<Rat>& shifts) {
        if (!wraps) {
            shifts.push_back(0);
            return;
        }
        // k with lo2 + k*unit <= hi1 and hi2 + k*unit >= lo1
        Rat kmin = (lo1 - hi2) / unit;
        Rat kmax = (hi1 - lo2) / unit;
        Int k0 = numerator(kmin) / denominator(kmin);
        while (Rat(k0) > kmin) k0 -= 1;
        for (Int k = k0; Rat(k) <= kmax; k += 1)
            if (Rat(k) >= kmin) shifts.push_back(Rat(k) * unit);
    };
    std::vector<Rat> xs, ys;
    range(wlo.x, whi.x, lo.x, hi.x, chart.width, chart.wraps_x(), xs);
    range(wlo.y, whi.y, lo.y, hi.y, chart.height, chart.wraps_y(), ys);
    for (const Rat& dx : xs)
        for (const Rat& dy : ys) out.push_back(RatVec{dx, dy});
    return out;
}

void poly_bbox(const std::vector<RatPoint>& poly, RatPoint& lo, RatPoint& hi) {
    lo = hi = poly.front();
    for (const RatPoint& p : poly) {
        lo.x = std::min(lo.x, p.x);
        lo.y = std::min(lo.y, p.y);
        hi.x = std::max(hi.x, p.x);
        hi.y = std::max(hi.y, p.y);
    }
}

// True when p lies strictly inside the loop.
bool point_strictly_inside(const std::vector<RatPoint>& loop, const RatPoint& p) {
    if (on_polyline(loop, p)) return false;
    return winding_number(loop, p) != 0;
}

// Any lattice translate of p strictly inside the loop?
bool lattice_point_inside(const Chart& chart, const std::vector<RatPoint>& loop,
                          const RatPoint& p) {
    RatPoint lo, hi;
    poly_bbox(loop, lo, hi);
    for (const RatVec& d : box_translates(chart, RatPoint{p.x, p.y}, RatPoint{p.x, p.y}, lo, hi))
        if (point_strictly_inside(loop, p + d)) return true;
    return false;
}

// Any lattice translate of p on the loop or strictly inside it (closed disk)?
bool lattice_point_on_or_inside(const Chart& chart, const std::vector<RatPoint>& loop,
                                const RatPoint& p) {
    RatPoint lo, hi;
    poly_bbox(loop, lo, hi);
    for (const RatVec& d : box_translates(chart, RatPoint{p.x, p.y}, RatPoint{p.x, p.y}, lo, hi)) {
        const RatPoint q = p + d;
        if (on_polyline(loop, q) || winding_number(loop, q) != 0) return true;
    }
    return false;
}

// Assembles the candidate loop polygon: the lifted a-arc followed by the
// lifted b-arc continuing from its endpoint. Returns false when the loop does
// not close to a null-homotopic polygon.
bool assemble_loop(const Surface& s, const std::vector<Leg>& a_arc, const std::vector<Leg>& b_arc,
                   std::vector<RatPoint>& loop) {
    const std::vector<RatPoint> la = lift_leg_chain(s, a_arc);
    std::vector<RatPoint> lb = lift_leg_chain(s, b_arc);
    // The b-arc starts at the surface point where the a-arc ends; translate
    // its lift so the joints coincide in the plane.
    const Chart& chart = s.chart(0);
    RatVec d = la.back() - lb.front();
    if (chart.wraps_x() && denominator(Rat(d.x / chart.width)) != 1) return false;
    if (!chart.wraps_x() && d.x != 0) return false;
    if (chart.wraps_y() && denominator(Rat(d.y / chart.height)) != 1) return false;
    if (!chart.wraps_y() && d.y != 0) return false;
    loop = la;
    for (std::size_t k = 1; k < lb.size(); ++k) {
        const RatPoint q = lb[k] + d;
        if (q != loop.back()) loop.push_back(q);
    }
    // Null-homotopic closure: the loop must end exactly at its start.
    if (loop.back() != loop.front()) return false;
    loop.pop_back();
    return loop.size() >= 3;
}

} // namespace

std::vector<Bigon> find_bigons(const CurveSystem& sys, int a, int b) {
    const PairContext ctx = prepare_transversal_pair(sys, a, b);
    const std::size_t m = ctx.points.size();
    std::vector<Bigon> out;
    if (m < 2) return out;
    const Chart& chart = sys.surface.chart(0);

    // A bigon whose a-arc carries no interior intersection point has corners
    // consecutive along a, and every innermost bigon is of that form, so
    // walking consecutive pairs finds them all.
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t j = (i + 1) % m;
        const Passage ai = ctx.points[i].on_a.front();
        const Passage aj = ctx.points[j].on_a.front();
        const Passage bi = ctx.points[i].on_b.front();
        const Passage bj = ctx.points[j].on_b.front();
        const std::vector<Leg> a_arc = arc_between(*ctx.a, ai, aj);
        // Two ways back along b: forward from j to i, or the reverse of the
        // forward walk from i to j.
        for (int dir = 0; dir < 2; ++dir) {
            const std::vector<Leg> b_arc = dir == 0
                                               ? arc_between(*ctx.b, bj, bi)
                                               : reversed_legs(arc_between(*ctx.b, bi, bj));
            std::vector<RatPoint> loop;
            if (!assemble_loop(sys.surface, a_arc, b_arc, loop)) continue;
            // A mouth square inside the polygon is a hole, not disk interior.
            bool has_hole = false;
            for (const Mouth& mo : sys.surface.mouths) {
                if (mo.base_chart != 0) continue;
                if (lattice_point_inside(chart, loop, mo.center)) {
                    has_hole = true;
                    break;
                }
            }
            if (has_hole) continue;
            Bigon bg;
            bg.a_from = ai;
            bg.a_to = aj;
            bg.b_from = bj;
            bg.b_to = bi;
            bg.arc_a = a_arc;
            bg.arc_b = b_arc;
            bg.innermost = true;
            for (std::size_t k = 0; k < m && bg.innermost; ++k) {
                if (k == i || k == j) continue;
                if (lattice_point_on_or_inside(chart, loop, ctx.points[k].at.p))
                    bg.innermost = false;
            }
            out.push_back(bg);
        }
    }
    return out;
}

std::vector<UnionCycle> curves_in_union(const CurveSystem& sys, int a, int b, std::size_t budget) {
    const PairContext ctx = prepare_transversal_pair(sys, a, b);
    const std::size_t m = ctx.points.size();
    std::vector<UnionCycle> out;
    if (m < 2) return out;

    struct Arc {
        int owner;        // 0 = a, 1 = b
        Passage from, to; // forward walk along the owner
        int from_node, to_node;
    };
    std::vector<Arc> arcs;
    for (int owner = 0; owner < 2; ++owner) {
        std::vector<std::pair<Passage, int>> order;
        for (std::size_t k = 0; k < m; ++k)
            order.emplace_back(owner == 0 ? ctx.points[k].on_a.front()
                                          : ctx.points[k].on_b.front(),
                               static_cast<int>(k));
        std::sort(order.begin(), order.end(),
                  [](const auto& p, const auto& q) { return p.first < q.first; });
        for (std::size_t k = 0; k < m; ++k) {
            const auto& cur = order[k];
            const auto& nxt = order[(k + 1) % m];
            arcs.push_back({owner, cur.first, nxt.first, cur.second, nxt.second});
        }
    }

    // Enumerate node-simple cycles of the 4-valent arrangement multigraph,
    // deduplicated by arc set; each arc may be traversed in either direction.
    std::set<std::vector<int>> seen;
    std::vector<std::vector<std::pair<int, bool>>> cycles; // (arc id, forward?)
    const int na = static_cast<int>(arcs.size());
    std::vector<char> arc_used(static_cast<std::size_t>(na), 0);
    std::vector<char> node_used(m, 0);
    std::vector<std::pair<int, bool>> path;

    auto record = [&]() {
        std::vector<int> key;
        for (const auto& st : path) key.push_back(st.first);
        std::sort(key.begin(), key.end());
        if (!seen.insert(key).second) return;
        if (seen.size() > budget) throw CycleBudgetExceeded("arrangement has too many cycles");
        cycles.push_back(path);
    };

    // DFS from a start node; arcs with id below the path minimum are skipped
    // implicitly by the outer loop ordering (each cycle is discovered from its
    // smallest arc id).
    std::function<void(int, int, int)> extend = [&](int node, int start_node, int min_arc) {
        for (int id = min_arc; id < na; ++id) {
            if (arc_used[static_cast<std::size_t>(id)]) continue;
            const Arc& arc = arcs[static_cast<std::size_t>(id)];
            for (int fwd = 1; fwd >= 0; --fwd) {
                const int u = fwd ? arc.from_node : arc.to_node;
                const int v = fwd ? arc.to_node : arc.from_node;
                if (u != node) continue;
                if (v == start_node) {
                    path.emplace_back(id, fwd != 0);
                    record();
                    path.pop_back();
                    continue;
                }
                if (node_used[static_cast<std::size_t>(v)]) continue;
                node_used[static_cast<std::size_t>(v)] = 1;
                arc_used[static_cast<std::size_t>(id)] = 1;
                path.emplace_back(id, fwd != 0);
                extend(v, start_node, min_arc);
                path.pop_back();
                arc_used[static_cast<std::size_t>(id)] = 0;
                node_used[static_cast<std::size_t>(v)] = 0;
            }
        }
    };

    for (int s = 0; s < na; ++s) {
        // Consecutive intersection points along a curve are distinct for
        // m >= 2, so every arc joins two different nodes.
        const Arc& first = arcs[static_cast<std::size_t>(s)];
        arc_used[static_cast<std::size_t>(s)] = 1;
        node_used[static_cast<std::size_t>(first.from_node)] = 1;
        node_used[static_cast<std::size_t>(first.to_node)] = 1;
        path.emplace_back(s, true);
        extend(first.to_node, first.from_node, s + 1);
        path.pop_back();
        node_used[static_cast<std::size_t>(first.to_node)] = 0;
        node_used[static_cast<std::size_t>(first.from_node)] = 0;
        arc_used[static_cast<std::size_t>(s)] = 0;
    }

    int next_label = 0;
    for (const Curve& c : sys.curves) next_label = std::max(next_label, c.label + 1);
    for (const auto& cyc : cycles) {
        bool any_a = false, any_b = false;
        for (const auto& st : cyc) {
            if (arcs[static_cast<std::size_t>(st.first)].owner == 0)
                any_a = true;
            else
                any_b = true;
        }
        if (!any_a || !any_b) continue; // the curves themselves
        Curve assembled;
        assembled.label = next_label;
        for (const auto& st : cyc) {
            const Arc& arc = arcs[static_cast<std::size_t>(st.first)];
            const Curve& owner = arc.owner == 0 ? *ctx.a : *ctx.b;
            std::vector<Leg> legs = st.second ? arc_between(owner, arc.from, arc.to)
                                              : reversed_legs(arc_between(owner, arc.from, arc.to));
            for (Leg& l : legs)
                if (l.pts.size() >= 2) assembled.legs.push_back(std::move(l));
        }
        UnionCycle uc;
        const auto cls = torus_class(sys.surface, assembled);
        uc.essential = !(cls.first == 0 && cls.second == 0);
        uc.curve = std::move(assembled);
        out.push_back(std::move(uc));
    }
    return out;
}

} // namespace finecurves
