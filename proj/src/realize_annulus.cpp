#include "finecurves/errors.hpp"
#include "finecurves/realize.hpp"

namespace finecurves {

namespace {

Curve core_curve(int label, const Rat& x) {
    Curve cv;
    cv.label = label;
    cv.legs.push_back({0, {{x, 0}, {x, 1}}});
    return cv;
}

} // namespace

Certificate realize_annulus(const SimpleGraph& g, const AdjacencySpec& sem) {
    if (sem.kind == Semantics::Fine)
        throw UnsupportedSemantics("the annulus comb construction cannot keep all pairs disjoint");
    if (sem.kind == Semantics::KFine && sem.k < 2)
        throw UnsupportedSemantics("annulus realization needs k >= 2");
    const int n = g.n;
    if (n < 1) throw BadGraph("annulus realization needs at least 1 vertex");

    Certificate cert;
    cert.surface_kind = "annulus";
    cert.surface_param = 0;
    cert.semantics = sem;
    cert.claimed = g;
    cert.system.surface = build_surface(SurfaceKind::Annulus);
    cert.trace.push_back("cores x=1/(i+2) on the annulus, comb arms at heights (i+1)/(n+2)");

    const Rat u = Rat(1, 16 * (n + 2) * (n + 2) * (n + 2));
    const Rat w = u / (2 * n + 2); // per-pocket height raise of the bottom arm
    const Rat reach = Rat(3, 4);
    auto core_x = [](int m) { return Rat(1, m + 2); };
    auto arm_h = [n](int m) { return Rat(m + 1, n + 2); };
    const int steps = sem.kind == Semantics::KFine ? sem.k / 2 : 0; // ceil((k-1)/2)

    cert.system.curves.push_back(core_curve(0, core_x(0)));
    for (int m = 1; m < n; ++m) {
        const Rat xm = core_x(m);
        std::vector<RatPoint> pts;
        pts.push_back({xm, 0});
        Rat cury = arm_h(m) - u;
        pts.push_back({xm, cury});
        // Bottom arm rightward across the earlier cores, pockets on non-edges.
        for (int t = m - 1; t >= 0; --t) {
            if (g.edge(t, m)) continue; // plain crossing mid-segment
            const Rat xt = core_x(t);
            if (sem.kind == Semantics::Finitary) {
                // Ride the earlier core for a shared sub-segment.
                pts.push_back({xt, cury});
                pts.push_back({xt, cury + w});
                cert.trace.push_back("pair {" + std::to_string(t) + "," + std::to_string(m) +
                                     "}: shared sub-segment (infinite overlap)");
            } else {
                // Replace one crossing by 2*steps+1, total 2*steps+2 > k.
                const Rat eps = u;
                const Rat step = w / (2 * steps + 2);
                pts.push_back({xt - eps, cury});
                for (int p = 0; p < 2 * steps + 1; ++p) {
                    const Rat y = cury + p * step;
                    const Rat side = (p % 2 == 0) ? Rat(xt + eps) : Rat(xt - eps);
                    pts.push_back({side, y});
                    pts.push_back({side, y + step});
                }
                pts.push_back({xt + eps, cury + w});
                cert.trace.push_back("pair {" + std::to_string(t) + "," + std::to_string(m) +
                                     "}: " + std::to_string(2 * steps + 2) + " crossings");
            }
            cury += w;
        }
        pts.push_back({reach, cury});
        pts.push_back({reach, arm_h(m) + u});
        pts.push_back({xm, arm_h(m) + u});
        pts.push_back({xm, 1});
        Curve cv;
        cv.label = m;
        cv.legs = legs_from_lifted(cert.system.surface.chart(0), 0, pts).first;
        cert.system.curves.push_back(cv);
    }
    validate_system(cert.system);
    return cert;
}

Certificate half_graph_system(int N) {
    if (N < 1) throw BadGraph("half graph system needs N >= 1");
    const int n = 2 * N;
    Certificate cert;
    cert.surface_kind = "annulus";
    cert.surface_param = 0;
    cert.semantics = {Semantics::Fine, 2};
    cert.system.surface = build_surface(SurfaceKind::Annulus);
    cert.trace.push_back("half graph on " + std::to_string(n) +
                         " vertices: left cores and nested right combs");

    const Rat u = Rat(1, 16 * (N + 1) * (N + 1) * (N + 1));
    const Rat h0 = Rat(1, 2);
    auto left_x = [N](int i) { return Rat(i + 1, 2 * N + 2); };
    auto right_x = [N](int j) { return Rat(N + j + 1, 2 * N + 2); };

    for (int i = 0; i < N; ++i) cert.system.curves.push_back(core_curve(i, left_x(i)));
    for (int j = 0; j < N; ++j) {
        if (j == N - 1) {
            // The last comb crosses nothing: a plain core.
            cert.system.curves.push_back(core_curve(N + j, right_x(j)));
            continue;
        }
        // Arms at h0 +- r_j, nested strictly inside all earlier combs' gaps,
        // reaching left between cores j and j+1 (crossing cores above j).
        const Rat rj = Rat(N + 1 - j, N + 1) * u;
        const Rat lj = (left_x(j) + left_x(j + 1)) / 2;
        const Rat bj = right_x(j);
        Curve cv;
        cv.label = N + j;
        cv.legs.push_back({0,
                           {{bj, 0},
                            {bj, h0 - rj},
                            {lj, h0 - rj},
                            {lj, h0 + rj},
                            {bj, h0 + rj},
                            {bj, 1}}});
        cert.system.curves.push_back(cv);
    }

    SimpleGraph claimed(n);
    for (int a = 0; a < N; ++a)
        for (int b = a + 1; b < N; ++b) {
            claimed.set_edge(a, b);         // left cores pairwise disjoint
            claimed.set_edge(N + a, N + b); // combs pairwise disjoint
        }
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            if (j >= i) claimed.set_edge(i, N + j);
    cert.claimed = claimed;
    validate_system(cert.system);
    return cert;
}

} // namespace finecurves
