#include <algorithm>

#include "finecurves/errors.hpp"
#include "finecurves/realize.hpp"

namespace finecurves {

namespace {

struct TorusEvent {
    Rat y0;      // bottom of the feature's height window
    int partner; // curve crossed by this feature
    bool finger; // true: consecutive-pair wiggle; false: handle detour
};

// Curve i on FineHandles(n): the vertical x=(2i+1)/(2n) interrupted by one
// feature per non-adjacent partner, all at disjoint height windows. Handle
// detours enter the mouth on its left side, ride the cylinder on a vertical
// leg, loop under the partner mouth crossing the partner's vertical twice,
// and ride back. Fingers poke right past the next vertical.
Curve build_torus_curve(const SimpleGraph& g, const Surface& surf, int i,
                        std::vector<std::string>& trace) {
    const int n = g.n;
    const Rat s = Rat(1, 16 * n * n * n);
    const Rat c = Rat(1, 64 * n * n * n);
    auto vert = [n](int v) { return Rat(2 * v + 1, 2 * n); };
    const Rat xi = vert(i);

    std::vector<TorusEvent> events;
    for (int j = i + 2; j < n; ++j) {
        if (i == 0 && j == n - 1) continue;
        if (!g.edge(i, j)) events.push_back({vert(j) - s / 4, j, false});
    }
    if (i + 1 < n && !g.edge(i, i + 1)) events.push_back({Rat(i + 1, n) - c, i + 1, true});
    std::sort(events.begin(), events.end(),
              [](const TorusEvent& a, const TorusEvent& b) { return a.y0 < b.y0; });

    Curve cv;
    cv.label = i;
    Leg cur;
    cur.chart = 0;
    cur.pts.push_back({xi, 0});
    for (const TorusEvent& ev : events) {
        if (ev.finger) {
            const Rat h = Rat(i + 1, n);
            const Rat tip = vert(ev.partner) + c;
            cur.pts.push_back({xi, h - c});
            cur.pts.push_back({tip, h - c});
            cur.pts.push_back({tip, h + c});
            cur.pts.push_back({xi, h + c});
            trace.push_back("pair {" + std::to_string(i) + "," + std::to_string(ev.partner) +
                            "}: finger wiggle, 2 crossings");
            continue;
        }
        const int j = ev.partner;
        const int t = fine_handle_index(surf, i, j);
        const Mouth& mi = surf.mouths[static_cast<size_t>(2 * t)];
        const Mouth& mj = surf.mouths[static_cast<size_t>(2 * t + 1)];
        const Rat cy = vert(j); // mi center height
        const Rat cyl_h = surf.chart(mi.handle_chart).height;
        const RatPoint p_in{xi + c, cy - s / 4};
        const RatPoint p_out{xi + c, cy + s / 4};
        const Rat t_in = *mouth_perimeter_param(mi, p_in);
        const Rat t_out = *mouth_perimeter_param(mi, p_out);
        // Cylinder legs are vertical, so they stay disjoint for free.
        const RatPoint e1 = *handle_to_mouth(surf, 2 * t + 1, {t_in, cyl_h});
        const RatPoint e2 = *handle_to_mouth(surf, 2 * t + 1, {t_out, cyl_h});
        // Depart the vertical into the mouth.
        cur.pts.push_back({xi, p_in.y});
        cur.pts.push_back(p_in);
        cv.legs.push_back(cur);
        cv.legs.push_back({mi.handle_chart, {{t_in, 0}, {t_in, cyl_h}}});
        // Loop under the partner mouth, crossing the partner vertical twice.
        const Rat xj = vert(j);
        const Rat ymin = mj.ymin();
        Leg exc;
        exc.chart = 0;
        exc.pts = {e1,
                   {e1.x, ymin - c},
                   {xj - c, ymin - c},
                   {xj - c, ymin - 2 * c},
                   {e2.x, ymin - 2 * c},
                   e2};
        cv.legs.push_back(exc);
        cv.legs.push_back({mi.handle_chart, {{t_out, cyl_h}, {t_out, 0}}});
        cur = Leg{};
        cur.chart = 0;
        cur.pts.push_back(p_out);
        cur.pts.push_back({xi, p_out.y});
        cv.essential_certified = true; // isotopic to the plain vertical
        trace.push_back("pair {" + std::to_string(i) + "," + std::to_string(j) +
                        "}: handle detour, 2 crossings near the partner mouth");
    }
    cur.pts.push_back({xi, 1});
    cv.legs.push_back(cur);
    return cv;
}

// Curve n-1 never detours (it is never the lower index of a handle pair); its
// only feature is the seam finger for a non-adjacent {0, n-1}, built from a
// lifted polyline and folded across x=1.
Curve build_last_curve(const SimpleGraph& g, const Surface& surf,
                       std::vector<std::string>& trace) {
    const int n = g.n;
    const Rat c = Rat(1, 64 * n * n * n);
    auto vert = [n](int v) { return Rat(2 * v + 1, 2 * n); };
    const Rat xi = vert(n - 1);
    std::vector<RatPoint> lifted;
    lifted.push_back({xi, 0});
    if (n >= 3 && !g.edge(0, n - 1)) {
        const Rat h = Rat(1, 4 * n);
        const Rat tip = 1 + vert(0) + c;
        lifted.push_back({xi, h - c});
        lifted.push_back({tip, h - c});
        lifted.push_back({tip, h + c});
        lifted.push_back({xi, h + c});
        trace.push_back("pair {0," + std::to_string(n - 1) +
                        "}: finger wiggle across the seam, 2 crossings");
    }
    lifted.push_back({xi, 1});
    Curve cv;
    cv.label = n - 1;
    cv.legs = legs_from_lifted(surf.chart(0), 0, lifted).first;
    return cv;
}

} // namespace

Certificate realize_fine_torus(const SimpleGraph& g) {
    const int n = g.n;
    if (n < 2) throw BadGraph("fine torus realization needs at least 2 vertices");
    Certificate cert;
    cert.surface_kind = "fine-handles";
    cert.surface_param = n;
    cert.semantics = {Semantics::Fine, 2};
    cert.claimed = g;
    cert.system.surface = build_surface(SurfaceKind::FineHandles, n);
    cert.trace.push_back("verticals x=(2i+1)/(2n) on fine-handles(" + std::to_string(n) + ")");
    for (int i = 0; i + 1 < n; ++i)
        cert.system.curves.push_back(build_torus_curve(g, cert.system.surface, i, cert.trace));
    cert.system.curves.push_back(build_last_curve(g, cert.system.surface, cert.trace));
    validate_system(cert.system);
    return cert;
}

} // namespace finecurves
