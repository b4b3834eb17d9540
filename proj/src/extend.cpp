#include <algorithm>
#include <optional>

#include "finecurves/errors.hpp"
#include "finecurves/extend.hpp"
#include "finecurves/surgeries.hpp"

namespace finecurves {

namespace {

Int rat_floor(const Rat& r) {
    Int num = numerator(r), den = denominator(r);
    Int q = num / den;
    if (num % den != 0 && num < 0) --q;
    return q;
}

Rat wrap01(const Rat& x) { return x - Rat(rat_floor(x)); }

SimpleGraph grown(const SimpleGraph& g, int extra) {
    SimpleGraph h(g.n + extra);
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            if (g.edge(i, j)) h.set_edge(i, j);
    return h;
}

bool base_chart_only(const CurveSystem& sys) {
    for (const Curve& c : sys.curves)
        for (const Leg& l : c.legs)
            if (l.chart != 0) return false;
    return true;
}

Curve from_lifted(const Surface& s, int label, const std::vector<RatPoint>& lifted) {
    Curve c;
    c.label = label;
    c.legs = legs_from_lifted(s.chart(0), 0, lifted).first;
    return c;
}

// Verifies the candidate extension; nullopt when it fails or is malformed.
std::optional<Certificate> try_extended(const Certificate& base, SimpleGraph claimed,
                                        const std::vector<Curve>& added,
                                        const std::string& note) {
    Certificate out = base;
    out.claimed = std::move(claimed);
    for (const Curve& c : added) out.system.curves.push_back(c);
    out.trace.push_back(note);
    try {
        if (check_certificate(out).ok) return out;
    } catch (const Error&) {
    }
    return std::nullopt;
}

// Generic levels: midpoints (with half-widths) of the circular gaps between
// the given sorted values in [0,1).
struct GapMid {
    Rat mid, half;
};

std::vector<GapMid> circular_gaps(std::vector<Rat> vals) {
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    if (vals.empty()) return {{Rat(1, 2), Rat(1, 2)}};
    std::vector<GapMid> out;
    for (std::size_t i = 0; i < vals.size(); ++i) {
        const Rat lo = vals[i];
        const Rat hi = i + 1 < vals.size() ? vals[i + 1] : Rat(vals[0] + 1);
        if (hi > lo) out.push_back({wrap01((lo + hi) / 2), Rat((hi - lo) / 2)});
    }
    return out;
}

// Three generic sub-levels per gap so that systems with few distinct vertex
// levels (bare trunks) still offer enough disjoint band slots.
std::vector<GapMid> refined_gaps(const std::vector<GapMid>& gaps) {
    std::vector<GapMid> out;
    for (const GapMid& g : gaps) {
        out.push_back({wrap01(g.mid - g.half / 2), g.half / 4});
        out.push_back({g.mid, g.half / 4});
        out.push_back({wrap01(g.mid + g.half / 2), g.half / 4});
    }
    return out;
}

// All vertex levels (y mod 1 when `horizontal`, else x mod 1) of base-chart
// legs in the system.
std::vector<Rat> special_levels(const CurveSystem& sys, bool horizontal) {
    std::vector<Rat> out;
    for (const Curve& c : sys.curves)
        for (const Leg& l : c.legs) {
            if (l.chart != 0) continue;
            for (const RatPoint& p : l.pts) out.push_back(wrap01(horizontal ? p.y : p.x));
        }
    return out;
}

// x positions (mod 1) where the curve meets the horizontal level y (mod 1).
// The level must avoid every vertex level of the curve.
void level_xs_into(const Surface& s, const Curve& c, const Rat& y,
                   std::vector<Rat>& out) {
    const auto lift = lift_closed(s, c);
    for (std::size_t i = 0; i + 1 < lift.size(); ++i) {
        const RatPoint &p = lift[i], &q = lift[i + 1];
        if (p.y == q.y) continue;
        const Rat lo = std::min(p.y, q.y), hi = std::max(p.y, q.y);
        for (Int j = rat_floor(lo - y) + 1; y + Rat(j) < hi; ++j) {
            if (y + Rat(j) <= lo) continue;
            const Rat t = (y + Rat(j) - p.y) / (q.y - p.y);
            out.push_back(wrap01(p.x + t * (q.x - p.x)));
        }
    }
}

// Merged x-projection of the curve as intervals within [0,1]; {{0,1}} when
// the curve spans every vertical line.
std::vector<std::pair<Rat, Rat>> x_span(const Surface& s, const Curve& c) {
    const auto lift = lift_closed(s, c);
    std::vector<std::pair<Rat, Rat>> iv;
    for (std::size_t i = 0; i + 1 < lift.size(); ++i) {
        Rat lo = std::min(lift[i].x, lift[i + 1].x);
        Rat hi = std::max(lift[i].x, lift[i + 1].x);
        if (hi - lo >= 1) return {{Rat(0), Rat(1)}};
        const Rat base(rat_floor(lo));
        lo -= base;
        hi -= base;
        if (hi <= 1) {
            iv.push_back({lo, hi});
        } else {
            iv.push_back({lo, Rat(1)});
            iv.push_back({Rat(0), hi - 1});
        }
    }
    std::sort(iv.begin(), iv.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<Rat, Rat>> merged;
    for (const auto& seg : iv) {
        if (!merged.empty() && seg.first <= merged.back().second)
            merged.back().second = std::max(merged.back().second, seg.second);
        else
            merged.push_back(seg);
    }
    return merged;
}

// Largest circular gap of the merged intervals; nullopt when they cover the
// whole circle.
std::optional<GapMid> largest_span_gap(const std::vector<std::pair<Rat, Rat>>& merged) {
    if (merged.empty()) return GapMid{Rat(1, 2), Rat(1, 2)};
    std::optional<GapMid> best;
    for (std::size_t i = 0; i < merged.size(); ++i) {
        const Rat lo = merged[i].second;
        const Rat hi =
            i + 1 < merged.size() ? merged[i + 1].first : Rat(merged[0].first + 1);
        if (hi <= lo) continue;
        if (!best || (hi - lo) / 2 > best->half)
            best = GapMid{wrap01((lo + hi) / 2), Rat((hi - lo) / 2)};
    }
    return best;
}

// A vertical band excursion: two horizontal arms at lvl +/- h from the trunk
// to `reach` (lift coordinates; reach may exceed [0,1)).
struct BandSpec {
    Rat lvl, h, reach;
};

std::vector<RatPoint> trunk_with_bands(const Rat& x, std::vector<BandSpec> bands) {
    std::sort(bands.begin(), bands.end(),
              [](const BandSpec& a, const BandSpec& b) { return a.lvl < b.lvl; });
    std::vector<RatPoint> pts;
    pts.push_back({x, Rat(0)});
    for (const BandSpec& b : bands) {
        pts.push_back({x, b.lvl - b.h});
        pts.push_back({b.reach, b.lvl - b.h});
        pts.push_back({b.reach, b.lvl + b.h});
        pts.push_back({x, b.lvl + b.h});
    }
    pts.push_back({x, Rat(1)});
    return pts;
}

Certificate apply_rule(const Certificate& cert, const AddIsolated&) {
    const int n = cert.claimed.n;
    const Surface& s = cert.system.surface;
    const SimpleGraph claimed2 = grown(cert.claimed, 1);
    if (s.kind == SurfaceKind::Annulus) {
        Rat xmin(1), xmax(0);
        for (const Curve& c : cert.system.curves)
            for (const Leg& l : c.legs)
                for (const RatPoint& p : l.pts) {
                    xmin = std::min(xmin, p.x);
                    xmax = std::max(xmax, p.x);
                }
        const Rat xs = (xmax + 1) / 2, xl = xmin / 2;
        for (const GapMid& g : circular_gaps(special_levels(cert.system, true))) {
            const auto chain = trunk_with_bands(xs, {{g.mid, g.half / 2, xl}});
            auto got = try_extended(cert, claimed2, {from_lifted(s, n, chain)},
                                    "extend: add isolated vertex " + std::to_string(n));
            if (got) return *got;
        }
        throw RuleInapplicable("no level sweeps across every curve");
    }
    // Torus-like: a horizontal circle at a generic level crosses every curve
    // wrapping vertically; fall back to vertical circles.
    for (const GapMid& g : circular_gaps(special_levels(cert.system, true))) {
        auto got = try_extended(
            cert, claimed2,
            {from_lifted(s, n, {{Rat(0), g.mid}, {Rat(1), g.mid}})},
            "extend: add isolated vertex " + std::to_string(n));
        if (got) return *got;
    }
    for (const GapMid& g : circular_gaps(special_levels(cert.system, false))) {
        auto got = try_extended(
            cert, claimed2,
            {from_lifted(s, n, {{g.mid, Rat(0)}, {g.mid, Rat(1)}})},
            "extend: add isolated vertex " + std::to_string(n));
        if (got) return *got;
    }
    throw RuleInapplicable("no circle crosses every existing curve");
}

Certificate apply_rule(const Certificate& cert, const AddPendant& rule) {
    const int n = cert.claimed.n;
    cert.claimed.check(rule.u);
    const Surface& s = cert.system.surface;
    if (!base_chart_only(cert.system))
        throw RuleInapplicable("pendant construction needs single-chart curves");
    const Curve& U = cert.system.curve_by_label(rule.u);
    SimpleGraph claimed2 = grown(cert.claimed, 1);
    claimed2.set_edge(rule.u, n);
    const std::string note =
        "extend: add pendant vertex " + std::to_string(n) + " at " +
        std::to_string(rule.u);
    const auto levels = refined_gaps(circular_gaps(special_levels(cert.system, true)));

    if (s.kind == SurfaceKind::Annulus) {
        // Cores separate the annulus, so the pendant sits on the far side of
        // everything and sweeps one band toward the target, stopping short.
        Rat xmin(1), xmax(0);
        for (const Curve& c : cert.system.curves)
            for (const Leg& l : c.legs)
                for (const RatPoint& p : l.pts) {
                    xmin = std::min(xmin, p.x);
                    xmax = std::max(xmax, p.x);
                }
        int tried = 0;
        for (const GapMid& g : levels) {
            if (++tried > 64) break;
            std::vector<Rat> ux, allx;
            level_xs_into(s, U, g.mid, ux);
            for (const Curve& c : cert.system.curves) level_xs_into(s, c, g.mid, allx);
            for (int placement = 0; placement < 2; ++placement) {
                Rat trunk, reach;
                if (placement == 0) { // far right, sweep left
                    trunk = (xmax + 1) / 2;
                    if (ux.empty()) {
                        reach = xmin / 2;
                    } else {
                        const Rat stop = *std::max_element(ux.begin(), ux.end());
                        Rat next = trunk;
                        for (const Rat& x : allx)
                            if (x > stop) next = std::min(next, x);
                        reach = (stop + next) / 2;
                    }
                } else { // far left, sweep right
                    trunk = xmin / 2;
                    if (ux.empty()) {
                        reach = (xmax + 1) / 2;
                    } else {
                        const Rat stop = *std::min_element(ux.begin(), ux.end());
                        Rat prev = trunk;
                        for (const Rat& x : allx)
                            if (x < stop) prev = std::max(prev, x);
                        reach = (stop + prev) / 2;
                    }
                }
                const auto chain = trunk_with_bands(trunk, {{g.mid, g.half / 2, reach}});
                auto got = try_extended(cert, claimed2, {from_lifted(s, n, chain)}, note);
                if (got) return *got;
            }
        }
        throw RuleInapplicable("the pendant target separates the system on the annulus");
    }

    // Torus-like: trunk in a gap of the target's x-projection, one band
    // sweeping right and one sweeping left, both stopping short of the
    // target at their own generic levels.
    const auto gap = largest_span_gap(x_span(s, U));
    if (!gap) throw RuleInapplicable("the target curve spans every vertical line");
    const Rat xs = gap->mid;
    int tried = 0;
    for (std::size_t i1 = 0; i1 < levels.size(); ++i1) {
        for (std::size_t i2 = 0; i2 < levels.size(); ++i2) {
            if (i1 == i2) continue;
            if (++tried > 400) break;
            const GapMid &g1 = levels[i1], &g2 = levels[i2];
            std::vector<Rat> ux1, allx1, ux2, allx2;
            level_xs_into(s, U, g1.mid, ux1);
            level_xs_into(s, U, g2.mid, ux2);
            for (const Curve& c : cert.system.curves) {
                level_xs_into(s, c, g1.mid, allx1);
                level_xs_into(s, c, g2.mid, allx2);
            }
            // Right arm at g1: stop before the target's first crossing.
            Rat xr = xs + 1;
            for (const Rat& x : ux1) xr = std::min(xr, Rat(x > xs ? x : x + 1));
            Rat prev = xs;
            for (const Rat& x : allx1) {
                const Rat xw = x > xs ? x : x + 1;
                if (xw < xr) prev = std::max(prev, xw);
            }
            const Rat right = (prev + xr) / 2;
            // Left arm at g2, mirrored.
            Rat xlft = xs - 1;
            for (const Rat& x : ux2) xlft = std::max(xlft, Rat(x < xs ? x : x - 1));
            Rat nxt = xs;
            for (const Rat& x : allx2) {
                const Rat xw = x < xs ? x : x - 1;
                if (xw > xlft) nxt = std::min(nxt, xw);
            }
            const Rat left = (xlft + nxt) / 2;
            const auto chain = trunk_with_bands(
                xs, {{g1.mid, g1.half / 2, right}, {g2.mid, g2.half / 2, left}});
            auto got = try_extended(cert, claimed2, {from_lifted(s, n, chain)}, note);
            if (got) return *got;
        }
    }
    throw RuleInapplicable("no band placement misses the target and crosses the rest");
}

Certificate apply_rule(const Certificate& cert, const AddCopycat& rule) {
    const int n = cert.claimed.n;
    cert.claimed.check(rule.w);
    const Surface& s = cert.system.surface;
    SimpleGraph claimed2 = grown(cert.claimed, 1);
    for (int z = 0; z < cert.claimed.n; ++z)
        if (z != rule.w && cert.claimed.edge(rule.w, z)) claimed2.set_edge(n, z);
    const std::string note =
        "extend: add copycat vertex " + std::to_string(n) + " of " +
        std::to_string(rule.w);
    Rat delta(1, 32);
    for (int iter = 0; iter < 12; ++iter, delta = delta / 2) {
        Curve copy;
        try {
            copy = pushoff(cert.system, rule.w, delta);
        } catch (const Error&) {
            continue;
        }
        copy.label = n;
        const auto chain = lift_closed(s, copy);
        std::size_t im = 0;
        Rat best(-1);
        for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
            const Rat len = std::max(rat_abs(chain[i + 1].x - chain[i].x),
                                     rat_abs(chain[i + 1].y - chain[i].y));
            if (len > best) {
                best = len;
                im = i;
            }
        }
        const RatPoint A = chain[im], B = chain[im + 1];
        const RatVec d = B - A;
        const RatVec nrm = {-d.y / best, d.x / best};
        const RatPoint P1 = A + Rat(1, 3) * d, P2 = A + Rat(2, 3) * d;
        for (int bumpside : {1, -1}) {
            const RatVec bump = (Rat(bumpside) * Rat(3) * delta / 2) * nrm;
            std::vector<RatPoint> bumped(chain.begin(), chain.begin() + im + 1);
            bumped.push_back(P1);
            bumped.push_back(P1 + bump);
            bumped.push_back(P2 + bump);
            bumped.push_back(P2);
            bumped.insert(bumped.end(), chain.begin() + im + 1, chain.end());
            try {
                auto got = try_extended(cert, claimed2, {from_lifted(s, n, bumped)}, note);
                if (got) return *got;
            } catch (const Error&) {
            }
        }
    }
    throw RuleInapplicable("no parallel copy admits a crossing bump");
}

Certificate apply_rule(const Certificate& cert, const BlowupClique& rule) {
    cert.claimed.check(rule.w);
    if (rule.m < 1) throw RuleInapplicable("clique size must be positive");
    if (rule.m == 1) return cert;
    const int n = cert.claimed.n;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            const auto rep =
                intersection_report(cert.system.surface, cert.system.curve_by_label(a),
                                    cert.system.curve_by_label(b));
            if (rep.infinite)
                throw RuleInapplicable("curves are not in nice position: infinite pair");
            for (const auto& pt : rep.points)
                if (pt.kind != PointKind::Crossing)
                    throw RuleInapplicable("curves are not in nice position: tangency");
        }
    SimpleGraph claimed2 = grown(cert.claimed, rule.m - 1);
    for (int j = 0; j + 1 < rule.m; ++j) {
        claimed2.set_edge(rule.w, n + j);
        for (int i = 0; i < j; ++i) claimed2.set_edge(n + i, n + j);
        for (int z = 0; z < n; ++z)
            if (z != rule.w && cert.claimed.edge(rule.w, z)) claimed2.set_edge(n + j, z);
    }
    const std::string note = "extend: blow up vertex " + std::to_string(rule.w) +
                             " to a clique of size " + std::to_string(rule.m);
    Rat delta(1, 32);
    for (int iter = 0; iter < 12; ++iter, delta = delta / 2) {
        std::vector<Curve> copies;
        try {
            for (int j = 1; j < rule.m; ++j) {
                Curve c = pushoff(cert.system, rule.w, Rat(j) * delta);
                c.label = n + j - 1;
                copies.push_back(c);
            }
        } catch (const Error&) {
            continue;
        }
        auto got = try_extended(cert, claimed2, copies, note);
        if (got) return *got;
    }
    throw RuleInapplicable("no annular neighborhood admits the parallel copies");
}

Certificate apply_rule(const Certificate& cert, const ConeClique& rule) {
    const Certificate withp = extend(cert, AddPendant{rule.w});
    return extend(withp, BlowupClique{cert.claimed.n, rule.m});
}

} // namespace

Certificate extend(const Certificate& cert, const ExtendRule& rule) {
    if (cert.semantics.kind != Semantics::Fine)
        throw RuleInapplicable("extension rules require Fine semantics");
    try {
        if (!check_certificate(cert).ok)
            throw RuleInapplicable("input certificate does not verify");
    } catch (const RuleInapplicable&) {
        throw;
    } catch (const Error& e) {
        throw RuleInapplicable(std::string("input certificate does not verify: ") +
                               e.what());
    }
    return std::visit([&](const auto& r) { return apply_rule(cert, r); }, rule);
}

} // namespace finecurves
