// Acceptance driver: exercises every advertised guarantee of the toolkit at
// desk scale and prints one pass/fail line per criterion. Exits nonzero if
// any criterion fails. All randomness is seeded, so reruns are reproducible.
#include <algorithm>
#include <cctype>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "finecurves/catalog.hpp"
#include "finecurves/errors.hpp"
#include "finecurves/graph.hpp"
#include "finecurves/jsonio.hpp"
#include "finecurves/obstructions.hpp"
#include "finecurves/realize.hpp"
#include "finecurves/surgeries.hpp"
#include "finecurves/svg.hpp"
#include "finecurves/verifier.hpp"
#include "helpers.hpp"

using namespace finecurves;
using namespace finecurves::testhelpers;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;
std::vector<std::string> g_notes;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void expect(bool cond, const std::string& what) {
    if (!cond && g_notes.size() < 12) g_notes.push_back(what);
}

void finish(int idx, const std::string& name) {
    if (g_notes.empty()) {
        std::cout << "criterion " << idx << " (" << name << "): pass" << std::endl;
    } else {
        std::cout << "criterion " << idx << " (" << name << "): FAIL";
        for (const std::string& n : g_notes) std::cout << "\n    " << n;
        std::cout << std::endl;
        ++g_failures;
    }
    g_notes.clear();
}

std::string slurp(const fs::path& path) {
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

const Curve& by_label(const CurveSystem& sys, int label) {
    for (const Curve& c : sys.curves)
        if (c.label == label) return c;
    throw std::runtime_error("no curve with label " + std::to_string(label));
}

bool same_geometry(const Curve& a, const Curve& b) {
    if (a.legs.size() != b.legs.size()) return false;
    for (std::size_t i = 0; i < a.legs.size(); ++i)
        if (a.legs[i].chart != b.legs[i].chart || a.legs[i].pts != b.legs[i].pts)
            return false;
    return true;
}

// Sorted meeting points with their kinds: equal signatures mean the recomputed
// reports of a pair are identical.
std::vector<std::pair<CanonPoint, PointKind>> signature(const Surface& s, const Curve& a,
                                                        const Curve& b) {
    IntersectionReport r = intersection_report(s, a, b);
    std::vector<std::pair<CanonPoint, PointKind>> sig;
    if (r.infinite) return sig; // callers only compare finite reports
    for (const IsectPoint& p : r.points) sig.emplace_back(p.at, p.kind);
    std::sort(sig.begin(), sig.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return sig;
}

bool verified_path(const Surface& s, const std::vector<Curve>& path, int k, const Curve& u,
                   const Curve& v) {
    if (path.size() < 2 || path.size() > 4) return false;
    if (!same_geometry(path.front(), u) || !same_geometry(path.back(), v)) return false;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        IntersectionReport r = intersection_report(s, path[i], path[i + 1]);
        if (r.infinite || r.count() > static_cast<std::size_t>(k)) return false;
    }
    return true;
}

std::string cert_text(const Certificate& cert) {
    return certificate_to_text({cert, "ok"});
}

// ---------------------------------------------------------------------------
// 1. The full catalog of graphs on up to five vertices realizes on the torus
//    model with verified Fine-semantics certificates, one per isomorphism
//    class, and the command-line catalog run agrees.
void criterion1() {
    const std::size_t kClassCount[] = {1, 2, 4, 11, 34};
    auto t0 = Clock::now();
    for (int n = 1; n <= 5; ++n) {
        std::vector<Certificate> certs = catalog_small_torus(n);
        std::vector<SimpleGraph> classes = isomorphism_classes(n);
        expect(certs.size() == kClassCount[n - 1],
               "catalog size n=" + std::to_string(n) + " is " + std::to_string(certs.size()));
        expect(classes.size() == kClassCount[n - 1],
               "class enumeration n=" + std::to_string(n));
        std::set<std::string> claimed, wanted;
        for (const SimpleGraph& g : classes) wanted.insert(emit_graph6(g));
        for (const Certificate& c : certs) {
            claimed.insert(emit_graph6(c.claimed));
            expect(c.semantics.kind == Semantics::Fine,
                   "non-Fine semantics in catalog n=" + std::to_string(n));
            if (!check_certificate(c).ok)
                expect(false, "catalog verdict not ok for " + emit_graph6(c.claimed));
        }
        expect(claimed == wanted, "catalog misses a class at n=" + std::to_string(n));
    }

    const std::string dir = temp_dir();
    CliResult r = run_cli("catalog --n 5 --dir " + dir, "FINECURVES_WORKERS=4 ");
    expect(r.exit_code == 0, "cli catalog exit code " + std::to_string(r.exit_code));
    expect(r.out.find("34 certificates, all ok") != std::string::npos, "cli catalog summary");
    int parsed = 0;
    for (int i = 0; i < 34; ++i) {
        std::string idx = std::to_string(i);
        std::string name = dir + "/catalog_n5_" + std::string(3 - idx.size(), '0') + idx + ".json";
        CertificateFile f = certificate_from_text(slurp(name));
        if (f.verdict == "ok" && f.cert.claimed.n == 5) ++parsed;
    }
    expect(parsed == 34, "cli catalog wrote " + std::to_string(parsed) + " ok files");

    double dt = seconds_since(t0);
    expect(dt < 60.0, "catalog runtime " + std::to_string(dt) + "s");
}

// ---------------------------------------------------------------------------
// 2. Fifty random graphs on 4..8 vertices realize on the torus model under
//    Fine semantics, label for label, with pairwise counts in {0,2} and the
//    full complement of handles, under five seconds per graph.
void criterion2() {
    std::mt19937_64 rng(20260814ULL);
    for (int i = 0; i < 50; ++i) {
        const int n = 4 + i % 5;
        SimpleGraph g = random_graph(rng, n);
        auto t0 = Clock::now();
        Certificate cert = realize_fine_torus(g);
        bool ok = check_certificate(cert).ok;
        double dt = seconds_since(t0);
        if (!ok) {
            expect(false, "verification failed for " + emit_graph6(g));
            continue;
        }
        PatternResult pat = induced_pattern(cert.system, cert.semantics);
        bool pairs_ok = true;
        for (int b = 1; b < n; ++b) {
            for (int a = 0; a < b; ++a) {
                const PairData& pd = pat.pair(a, b);
                if (pd.infinite) pairs_ok = false;
                if (g.edge(a, b) ? pd.points != 0 : (pd.points != 2 || !pd.all_crossing))
                    pairs_ok = false;
            }
        }
        expect(pairs_ok, "pairwise counts wrong for " + emit_graph6(g));
        expect(cert.system.surface.handle_count() == n * (n - 1) / 2 - n,
               "handle count wrong for " + emit_graph6(g));
        expect(dt < 5.0, "slow realization (" + std::to_string(dt) + "s) for " + emit_graph6(g));
    }
}

// ---------------------------------------------------------------------------
// 3. Fifty random graphs on 3..10 vertices realize on the annulus under both
//    finitary semantics (non-edges share a segment, edges cross twice) and
//    k=2 semantics (non-edges cross four times, edges twice).
void criterion3() {
    std::mt19937_64 rng(31415926ULL);
    for (int i = 0; i < 50; ++i) {
        const int n = 3 + i % 8;
        SimpleGraph g = random_graph(rng, n);
        auto t0 = Clock::now();
        Certificate fin = realize_annulus(g, parse_semantics("finitary"));
        Certificate k2 = realize_annulus(g, parse_semantics("k=2"));
        bool ok = check_certificate(fin).ok && check_certificate(k2).ok;
        double dt = seconds_since(t0);
        if (!ok) {
            expect(false, "verification failed for " + emit_graph6(g));
            continue;
        }
        PatternResult pf = induced_pattern(fin.system, fin.semantics);
        PatternResult p2 = induced_pattern(k2.system, k2.semantics);
        bool pairs_ok = true;
        for (int b = 1; b < n; ++b) {
            for (int a = 0; a < b; ++a) {
                const PairData& f = pf.pair(a, b);
                const PairData& k = p2.pair(a, b);
                if (k.infinite || !k.all_crossing) pairs_ok = false;
                if (g.edge(a, b)) {
                    if (f.infinite || f.points != 2 || !f.all_crossing) pairs_ok = false;
                    if (k.points != 2) pairs_ok = false;
                } else {
                    if (!f.infinite) pairs_ok = false;
                    if (k.points != 4) pairs_ok = false;
                }
            }
        }
        expect(pairs_ok, "pair pattern wrong for " + emit_graph6(g));
        expect(dt < 5.0, "slow realization (" + std::to_string(dt) + "s) for " + emit_graph6(g));
    }
}

// ---------------------------------------------------------------------------
// 4. Half-graph systems: curve v_i meets curve w_j exactly when j < i, for
//    every pair, for every size up to ten.
void criterion4() {
    for (int N = 1; N <= 10; ++N) {
        Certificate cert = half_graph_system(N);
        expect(check_certificate(cert).ok, "half-graph N=" + std::to_string(N) + " not ok");
        const Surface& s = cert.system.surface;
        for (int i = 0; i < N; ++i) {
            for (int j = 0; j < N; ++j) {
                IntersectionReport rep =
                    intersection_report(s, by_label(cert.system, i), by_label(cert.system, N + j));
                if (rep.disjoint() != (j >= i))
                    expect(false, "half-graph N=" + std::to_string(N) + " pair v" +
                                      std::to_string(i) + ",w" + std::to_string(j));
            }
        }
    }
}

// ---------------------------------------------------------------------------
// 5. The annulus-core obstruction matches hand-picked verdicts, the cone
//    reduction handles the six-wheel, and the backtracking orienter agrees
//    with the exhaustive orientation oracle on every graph with at most six
//    vertices.
void criterion5() {
    auto t0 = Clock::now();
    for (int m : {5, 7, 9})
        expect(annulus_core_obstruction(cycle_graph(m)).obstruction,
               "C" + std::to_string(m) + " should be obstructed");
    expect(annulus_core_obstruction(fig4_graph()).obstruction, "figure graph should be obstructed");
    for (int m : {4, 6})
        expect(!annulus_core_obstruction(cycle_graph(m)).obstruction,
               "C" + std::to_string(m) + " should be clean");
    SimpleGraph p4(4);
    p4.set_edge(0, 1);
    p4.set_edge(1, 2);
    p4.set_edge(2, 3);
    expect(!annulus_core_obstruction(p4).obstruction, "P4 should be clean");
    SimpleGraph k5(5);
    for (int b = 1; b < 5; ++b)
        for (int a = 0; a < b; ++a) k5.set_edge(a, b);
    expect(!annulus_core_obstruction(k5).obstruction, "K5 should be clean");
    expect(cone_reduce_check(generate_family("wheel:6")).obstruction,
           "W6 cone reduction should be obstructed");

    int swept = 0;
    for (int n = 1; n <= 6; ++n) {
        for (const SimpleGraph& g : isomorphism_classes(n)) {
            auto fast = transitive_orientation(g);
            auto slow = exhaustive_orientation(g);
            if (fast.has_value() != slow.has_value())
                expect(false, "orienter disagrees with oracle on " + emit_graph6(g));
            if (fast && !fast->valid_for(g))
                expect(false, "invalid orientation for " + emit_graph6(g));
            ObstructionVerdict v = annulus_core_obstruction(g);
            if (v.obstruction != !slow.has_value())
                expect(false, "verdict disagrees with oracle on " + emit_graph6(g));
            ++swept;
        }
    }
    expect(swept == 208, "sweep covered " + std::to_string(swept) + " classes");
    double dt = seconds_since(t0);
    expect(dt < 600.0, "sweep runtime " + std::to_string(dt) + "s");
}

// ---------------------------------------------------------------------------
// 6. Join families: both parameter choices with two blocks produce 22-vertex
//    graphs in which each 11-vertex block is itself obstructed.
void criterion6() {
    for (auto [gp, bp] : {std::pair<int, int>{0, 3}, std::pair<int, int>{1, 1}}) {
        const int copies = 2 * gp + bp - 1;
        const std::string spec = "join:" + std::to_string(gp) + "," + std::to_string(bp);
        SimpleGraph G = generate_family(spec);
        expect(G.n == copies * 11,
               spec + " has " + std::to_string(G.n) + " vertices, wanted " +
                   std::to_string(copies * 11));
        for (int c = 0; c < copies; ++c) {
            std::vector<int> verts;
            for (int v = 0; v < 11; ++v) verts.push_back(11 * c + v);
            if (!annulus_core_obstruction(G.induced(verts)).obstruction)
                expect(false, spec + " block " + std::to_string(c) + " not obstructed");
        }
    }
}

// ---------------------------------------------------------------------------
// 7. Surgery contracts on one hundred instances per case: a touching pair, a
//    single-bigon pair (with a bystander third curve whose reports must not
//    move), and minimal-position pairs with 2..4 crossings. Surgery paths
//    verify with length at most three and unmodified endpoints; bigon removal
//    drops the count by exactly two.
void criterion7() {
    for (int t = 0; t < 100; ++t) {
        Rat tip_x = rq(47 + t % 7, 100), trunk = rq(11 + t % 13, 100);
        Rat tip_y = rq(20 + (7 * t) % 60, 100), half_h = rq(1 + t % 8, 100);
        CurveSystem sys = touching_system(trunk, tip_x, tip_y, half_h);
        IntersectionReport rep = intersection_report(sys.surface, sys.curves[0], sys.curves[1]);
        if (rep.count() != 1 || rep.points[0].kind != PointKind::Touching) {
            expect(false, "touching fixture " + std::to_string(t) + " malformed");
            continue;
        }
        if (!verified_path(sys.surface, surgery_path(sys, 0, 1, 0), 0, sys.curves[0],
                           sys.curves[1]))
            expect(false, "touching path " + std::to_string(t) + " failed to verify");
    }

    for (int t = 0; t < 100; ++t) {
        Rat trunk = rq(15 + t % 16, 100), reach = rq(52 + t % 9, 100);
        Rat y_lo = rq(31 + t % 12, 100), y_hi = rq(69 - (t / 2) % 10, 100);
        CurveSystem sys = single_bigon_system(trunk, reach, y_lo, y_hi);
        sys.curves.push_back(vertical_curve(sys.surface, 7, rq(36 + t % 5, 100)));
        const Surface& s = sys.surface;

        IntersectionReport before = intersection_report(s, sys.curves[0], sys.curves[1]);
        if (before.infinite || before.count() != 2) {
            expect(false, "bigon fixture " + std::to_string(t) + " malformed");
            continue;
        }
        auto sig07 = signature(s, sys.curves[0], sys.curves[2]);
        auto sig17 = signature(s, sys.curves[1], sys.curves[2]);
        expect(sig17.size() == 2, "bystander should cross the finger twice");

        std::vector<Bigon> bigons = find_bigons(sys, 0, 1);
        if (bigons.size() != 1 || !bigons[0].innermost) {
            expect(false, "bigon fixture " + std::to_string(t) + " has no unique bigon");
            continue;
        }
        if (!verified_path(sys.surface, surgery_path(sys, 0, 1, 1), 1, sys.curves[0],
                           sys.curves[1]))
            expect(false, "bigon path " + std::to_string(t) + " failed to verify");

        Curve moved = remove_innermost_bigon(sys, 0, 1, bigons[0]);
        IntersectionReport after = intersection_report(s, moved, sys.curves[1]);
        expect(!after.infinite && after.count() == before.count() - 2,
               "bigon removal " + std::to_string(t) + " did not drop the count by two");
        expect(signature(s, moved, sys.curves[2]) == sig07,
               "moved-curve bystander report changed at " + std::to_string(t));
        expect(signature(s, sys.curves[1], sys.curves[2]) == sig17,
               "untouched-pair report changed at " + std::to_string(t));
    }

    for (int t = 0; t < 100; ++t) {
        const int q = 2 + t % 3;
        Surface s = build_surface(SurfaceKind::Torus);
        CurveSystem sys;
        sys.surface = s;
        sys.curves.push_back(horizontal_curve(s, 0, rq(2 * (t % 8) + 1, 16)));
        sys.curves.push_back(line_curve(s, 1, rq(t % 11 + 1, 13), rq(0), 1, q));
        IntersectionReport rep = intersection_report(s, sys.curves[0], sys.curves[1]);
        bool crossings_ok = !rep.infinite && rep.count() == static_cast<std::size_t>(q);
        for (const IsectPoint& p : rep.points)
            if (p.kind != PointKind::Crossing) crossings_ok = false;
        if (!crossings_ok || !find_bigons(sys, 0, 1).empty()) {
            expect(false, "minimal fixture " + std::to_string(t) + " malformed");
            continue;
        }
        if (!verified_path(s, surgery_path(sys, 0, 1, q - 1), q - 1, sys.curves[0],
                           sys.curves[1]))
            expect(false, "minimal path " + std::to_string(t) + " failed to verify");
    }
}

// ---------------------------------------------------------------------------
// 8. Distance-two witnesses: on one hundred torus pairs (eighty transversal
//    line pairs, twenty sharing a segment) the witness is disjoint from the
//    first curve and meets the second finitely, with every meeting a crossing.
void criterion8() {
    std::mt19937_64 rng(8888ULL);
    const std::pair<int, int> classes[] = {{0, 1}, {1, 0}, {1, 1}, {1, 2}, {2, 1}, {1, 3}};
    int overlap_pairs = 0;
    for (int t = 0; t < 100; ++t) {
        Surface s = build_surface(SurfaceKind::Torus);
        CurveSystem sys;
        sys.surface = s;
        if (t % 5 == 4) {
            Rat v = rq(20 + t % 20, 60);
            sys.curves.push_back(vertical_curve(s, 0, v));
            std::vector<RatPoint> pts = {{v, rq(3, 10)},
                                         {v, rq(7, 10)},
                                         {Rat(v + rq(1, 10)), rq(7, 10)},
                                         {Rat(v + rq(1, 10)), rq(13, 10)},
                                         {v, rq(13, 10)}};
            sys.curves.push_back(lifted_curve(s, 1, pts));
            if (!intersection_report(s, sys.curves[0], sys.curves[1]).infinite) {
                expect(false, "overlap fixture " + std::to_string(t) + " not infinite");
                continue;
            }
            ++overlap_pairs;
        } else {
            const int ia = static_cast<int>(rng() % 6);
            const int ib = static_cast<int>((ia + 1 + rng() % 5) % 6);
            sys.curves.push_back(line_curve(s, 0, rq(static_cast<int>(rng() % 17), 19),
                                            rq(static_cast<int>(rng() % 17), 19),
                                            classes[ia].first, classes[ia].second));
            sys.curves.push_back(line_curve(s, 1, rq(static_cast<int>(rng() % 17), 23),
                                            rq(static_cast<int>(rng() % 17), 23),
                                            classes[ib].first, classes[ib].second));
        }
        Curve c = distance2_witness(sys, 0, 1);
        IntersectionReport ra = intersection_report(s, c, sys.curves[0]);
        IntersectionReport rb = intersection_report(s, c, sys.curves[1]);
        bool ok = ra.disjoint() && !rb.infinite;
        for (const IsectPoint& p : rb.points)
            if (p.kind != PointKind::Crossing) ok = false;
        expect(ok, "witness " + std::to_string(t) + " failed to verify");
    }
    expect(overlap_pairs == 20, "sample held " + std::to_string(overlap_pairs) + " overlap pairs");
}

// ---------------------------------------------------------------------------
// 9. Cycles in the union of two curves: none when the curves meet at most
//    once; at least one, including an essential one, when they meet twice.
void criterion9() {
    for (int t = 0; t < 50; ++t) {
        Surface s = build_surface(SurfaceKind::Torus);
        CurveSystem sys;
        sys.surface = s;
        if (t < 25) {
            Rat xa = rq(t + 1, 60);
            sys.curves.push_back(vertical_curve(s, 0, xa));
            sys.curves.push_back(vertical_curve(s, 1, Rat(xa + rq(1, 2))));
        } else {
            sys.curves.push_back(vertical_curve(s, 0, rq(t - 24, 30)));
            sys.curves.push_back(horizontal_curve(s, 1, rq(t - 24, 30)));
        }
        if (!curves_in_union(sys, 0, 1).empty())
            expect(false, "union of sparse pair " + std::to_string(t) + " not empty");
    }
    for (int t = 0; t < 50; ++t) {
        Surface s = build_surface(SurfaceKind::Torus);
        CurveSystem sys;
        sys.surface = s;
        if (t < 25) {
            sys.curves.push_back(horizontal_curve(s, 0, rq(2 * t + 1, 64)));
            sys.curves.push_back(line_curve(s, 1, rq(t + 1, 40), rq(0), 1, 2));
        } else {
            Rat trunk = rq(15 + t % 16, 100), reach = rq(52 + t % 9, 100);
            Rat y_lo = rq(31 + t % 12, 100), y_hi = rq(69 - (t / 2) % 10, 100);
            sys.curves.push_back(vertical_curve(s, 0, rq(1, 2)));
            sys.curves.push_back(lifted_curve(s, 1, {{trunk, rq(0)},
                                                     {trunk, y_lo},
                                                     {reach, y_lo},
                                                     {reach, y_hi},
                                                     {trunk, y_hi},
                                                     {trunk, rq(1)}}));
        }
        std::vector<UnionCycle> cycles = curves_in_union(sys, 0, 1);
        bool essential = false;
        for (const UnionCycle& c : cycles)
            if (c.essential) essential = true;
        expect(!cycles.empty() && essential,
               "union of crossing pair " + std::to_string(t) + " lacks an essential cycle");
    }
}

// ---------------------------------------------------------------------------
// 10. Determinism and exactness: reruns yield byte-identical artifacts, the
//     geometry sources contain no floating-point types, and a rational
//     perturbation thirty decimal orders below the coordinates changes
//     intersection counts exactly.
void criterion10() {
    {
        auto c1 = catalog_small_torus(3), c2 = catalog_small_torus(3);
        std::string t1, t2;
        for (const Certificate& c : c1) t1 += cert_text(c);
        for (const Certificate& c : c2) t2 += cert_text(c);
        expect(!t1.empty() && t1 == t2, "catalog rerun differs");

        SimpleGraph g = parse_graph6("Dhc");
        expect(cert_text(realize_fine_torus(g)) == cert_text(realize_fine_torus(g)),
               "torus realization rerun differs");
        AdjacencySpec k2 = parse_semantics("k=2");
        expect(cert_text(realize_annulus(g, k2)) == cert_text(realize_annulus(g, k2)),
               "annulus realization rerun differs");

        Certificate cert = realize_fine_torus(g);
        expect(render_svg(cert.system) == render_svg(cert.system), "svg rerun differs");

        CurveSystem sys = touching_system();
        expect(curves_to_text(surgery_path(sys, 0, 1, 0)) ==
                   curves_to_text(surgery_path(sys, 0, 1, 0)),
               "surgery path rerun differs");
    }

    {
        auto is_ident = [](char c) {
            return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
        };
        auto has_word = [&](const std::string& text, const std::string& word) {
            for (std::size_t at = text.find(word); at != std::string::npos;
                 at = text.find(word, at + 1)) {
                bool lb = at == 0 || !is_ident(text[at - 1]);
                bool rb = at + word.size() >= text.size() || !is_ident(text[at + word.size()]);
                if (lb && rb) return true;
            }
            return false;
        };
        int audited = 0;
        std::string offenders;
        for (const char* sub : {"src", "include", "tools"}) {
            for (const auto& entry : fs::recursive_directory_iterator(fs::path(src_dir()) / sub)) {
                if (!entry.is_regular_file()) continue;
                const std::string ext = entry.path().extension().string();
                if (ext != ".cpp" && ext != ".hpp") continue;
                ++audited;
                const std::string text = slurp(entry.path());
                if (has_word(text, "float") || has_word(text, "double"))
                    offenders += " " + entry.path().filename().string();
            }
        }
        expect(audited >= 30, "audit saw only " + std::to_string(audited) + " files");
        expect(offenders.empty(), "floating-point tokens in:" + offenders);
    }

    {
        Int den = 1;
        for (int i = 0; i < 30; ++i) den *= 10;
        const Rat eps(Int(1), den);
        Surface s = build_surface(SurfaceKind::Torus);
        auto finger_tip = [&](const Rat& tip) {
            CurveSystem sys;
            sys.surface = s;
            sys.curves.push_back(vertical_curve(s, 0, rq(1, 2)));
            sys.curves.push_back(lifted_curve(s, 1, {{rq(1, 4), rq(0)},
                                                     {rq(1, 4), rq(3, 8)},
                                                     {tip, rq(1, 2)},
                                                     {rq(1, 4), rq(5, 8)},
                                                     {rq(1, 4), rq(1)}}));
            return intersection_report(s, sys.curves[0], sys.curves[1]);
        };
        IntersectionReport exact = finger_tip(rq(1, 2));
        IntersectionReport past = finger_tip(Rat(rq(1, 2) + eps));
        IntersectionReport shy = finger_tip(Rat(rq(1, 2) - eps));
        expect(exact.count() == 1 && exact.points[0].kind == PointKind::Touching,
               "exact tip should touch once");
        bool past_ok = past.count() == 2;
        for (const IsectPoint& p : past.points)
            if (p.kind != PointKind::Crossing) past_ok = false;
        expect(past_ok, "tip nudged past should cross twice");
        expect(shy.disjoint(), "tip nudged short should be disjoint");
    }
}

} // namespace

int main() {
    struct Criterion {
        int idx;
        const char* name;
        void (*fn)();
    };
    const Criterion criteria[] = {
        {1, "small-graph catalog on the torus", criterion1},
        {2, "random fine-torus realizations", criterion2},
        {3, "random annulus realizations, finitary and k=2", criterion3},
        {4, "half-graph systems on the annulus", criterion4},
        {5, "annulus-core obstruction vs exhaustive oracle", criterion5},
        {6, "join families contain disjoint obstructed blocks", criterion6},
        {7, "surgery contracts: touching, bigon, minimal position", criterion7},
        {8, "distance-two witnesses on the torus", criterion8},
        {9, "cycles in two-curve unions", criterion9},
        {10, "determinism and exact arithmetic", criterion10},
    };
    for (const Criterion& c : criteria) {
        try {
            c.fn();
        } catch (const std::exception& e) {
            expect(false, std::string("unexpected exception: ") + e.what());
        }
        finish(c.idx, c.name);
    }
    if (g_failures == 0) {
        std::cout << "acceptance: all 10 criteria passed" << std::endl;
        return 0;
    }
    std::cout << "acceptance: " << g_failures << " criteria FAILED" << std::endl;
    return 1;
}
