#include <algorithm>
#include <numeric>

#include "finecurves/catalog.hpp"
#include "finecurves/errors.hpp"

namespace finecurves {

namespace {

struct Band {
    int emanator = 0;
    int target = 0;
    bool rightward = false;
    int slot = 0; // global height slot
};

// Positions strictly between pos_e and pos_t walking in the given direction
// around the cycle of n positions.
std::vector<int> arc_interior(int n, int pos_e, int pos_t, bool rightward) {
    std::vector<int> out;
    int p = pos_e;
    for (;;) {
        p = rightward ? (p + 1) % n : (p + n - 1) % n;
        if (p == pos_t) break;
        out.push_back(p);
    }
    return out;
}

// A band from e may sweep only over non-neighbors of e.
bool arc_clear(const SimpleGraph& g, const std::vector<int>& perm,
               const std::vector<int>& pos, int e, int t, bool rightward) {
    for (int p : arc_interior(g.n, pos[e], pos[t], rightward))
        if (g.edge(e, perm[p])) return false;
    return true;
}

bool choose_bands(const SimpleGraph& g, const std::vector<int>& perm,
                  const std::vector<int>& pos, std::vector<Band>& bands) {
    bands.clear();
    int slot = 0;
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b) {
            if (g.edge(a, b)) continue;
            Band bd;
            bd.slot = slot++;
            bool found = false;
            for (int e : {a, b}) {
                const int t = e == a ? b : a;
                for (bool rightward : {false, true}) {
                    if (!arc_clear(g, perm, pos, e, t, rightward)) continue;
                    bd.emanator = e;
                    bd.target = t;
                    bd.rightward = rightward;
                    found = true;
                    break;
                }
                if (found) break;
            }
            if (!found) return false;
            bands.push_back(bd);
        }
    return true;
}

} // namespace

Certificate realize_small_torus(const SimpleGraph& g) {
    const int n = g.n;
    if (n < 1) throw BadGraph("torus realization needs at least 1 vertex");
    if (n > 8) throw BudgetExceeded("cyclic placement search is factorial; n <= 8");

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> pos(n);
    std::vector<Band> bands;
    bool found = false;
    do {
        for (int p = 0; p < n; ++p) pos[perm[p]] = p;
        if (choose_bands(g, perm, pos, bands)) {
            found = true;
            break;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (!found)
        throw NotRealized("no cyclic trunk placement leaves every non-edge a clear side");

    Certificate cert;
    cert.surface_kind = "torus";
    cert.surface_param = 0;
    cert.semantics = {Semantics::Fine, 2};
    cert.claimed = g;
    cert.system.surface = build_surface(SurfaceKind::Torus);
    {
        std::string line = "trunk order:";
        for (int p = 0; p < n; ++p) line += " " + std::to_string(perm[p]);
        cert.trace.push_back(line);
    }

    const int slots = std::max<int>(1, static_cast<int>(bands.size()));
    const Rat nu = Rat(1, 4 * (slots + 1));
    const Rat kappa = Rat(1, 4 * (n + 1));
    auto trunk_x = [&](int v) { return Rat(pos[v] + 1, n + 1); };

    for (int v = 0; v < n; ++v) {
        std::vector<Band> mine;
        for (const Band& bd : bands)
            if (bd.emanator == v) mine.push_back(bd);
        std::sort(mine.begin(), mine.end(),
                  [](const Band& l, const Band& r) { return l.slot < r.slot; });
        const Rat xv = trunk_x(v);
        std::vector<RatPoint> pts;
        pts.push_back({xv, 0});
        for (const Band& bd : mine) {
            const Rat ylo = Rat(2 * bd.slot + 1, 2 * (slots + 1));
            const Rat yhi = ylo + nu;
            Rat xt = trunk_x(bd.target);
            if (bd.rightward && xt < xv) xt += 1;
            if (!bd.rightward && xt > xv) xt -= 1;
            const Rat xfar = bd.rightward ? Rat(xt + kappa) : Rat(xt - kappa);
            pts.push_back({xv, ylo});
            pts.push_back({xfar, ylo});
            pts.push_back({xfar, yhi});
            pts.push_back({xv, yhi});
            cert.trace.push_back("band " + std::to_string(bd.emanator) + "->" +
                                 std::to_string(bd.target));
        }
        pts.push_back({xv, 1});
        Curve cv;
        cv.label = v;
        cv.legs = legs_from_lifted(cert.system.surface.chart(0), 0, pts).first;
        cert.system.curves.push_back(cv);
    }
    validate_system(cert.system);
    return cert;
}

std::vector<Certificate> catalog_small_torus(int n) {
    if (n < 1 || n > 5) throw BadGraph("catalog covers graphs on 1..5 vertices");
    std::vector<Certificate> out;
    for (const SimpleGraph& g : isomorphism_classes(n)) out.push_back(realize_small_torus(g));
    return out;
}

} // namespace finecurves
