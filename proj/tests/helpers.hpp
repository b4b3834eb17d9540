#pragma once
// Shared fixtures for the test suite: small curve builders on base charts,
// random graph generation, and helpers for driving the CLI binary.
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "finecurves/curve.hpp"
#include "finecurves/graph.hpp"
#include "finecurves/surface.hpp"

namespace finecurves::testhelpers {

inline Rat rq(long p, long q = 1) { return Rat(p) / q; }

// Closed base-chart curve from a lifted polyline (see legs_from_lifted).
inline Curve lifted_curve(const Surface& s, int label, const std::vector<RatPoint>& lifted) {
    Curve c;
    c.label = label;
    c.legs = legs_from_lifted(s.chart(0), 0, lifted).first;
    return c;
}

// Vertical (0,1)-circle at x = x0.
inline Curve vertical_curve(const Surface& s, int label, const Rat& x0) {
    return lifted_curve(s, label, {{x0, Rat(0)}, {x0, Rat(1)}});
}

// Horizontal (1,0)-circle at y = y0.
inline Curve horizontal_curve(const Surface& s, int label, const Rat& y0) {
    return lifted_curve(s, label, {{Rat(0), y0}, {Rat(1), y0}});
}

// Straight line in class (p,q) through (x0,y0), as a single lifted segment.
inline Curve line_curve(const Surface& s, int label, const Rat& x0, const Rat& y0,
                        long p, long q) {
    return lifted_curve(s, label, {{x0, y0}, {x0 + p, y0 + q}});
}

// Fixture: a vertical and a finger grazing it in one touching point, plus
// parameters to vary the trunk position, tip height and tip reach.
inline CurveSystem touching_system(const Rat& trunk = Rat(1) / 4, const Rat& tip_x = Rat(1) / 2,
                                   const Rat& tip_y = Rat(1) / 2, const Rat& half_h = Rat(1) / 8) {
    CurveSystem sys;
    sys.surface = build_surface(SurfaceKind::Torus);
    sys.curves.push_back(vertical_curve(sys.surface, 0, tip_x));
    sys.curves.push_back(lifted_curve(sys.surface, 1,
                                      {{trunk, Rat(0)},
                                       {trunk, tip_y - half_h},
                                       {tip_x, tip_y},
                                       {trunk, tip_y + half_h},
                                       {trunk, Rat(1)}}));
    return sys;
}

// Fixture: one innermost bigon between a vertical and a finger on the handled
// surface (the complementary disk is blocked by a mouth). The finger spans
// x in [trunk, reach] and y in [y_lo, y_hi]; defaults are the frozen values.
inline CurveSystem single_bigon_system(const Rat& trunk = Rat(1) / 4,
                                       const Rat& reach = Rat(3) / 5,
                                       const Rat& y_lo = Rat(3) / 10,
                                       const Rat& y_hi = Rat(7) / 10) {
    CurveSystem sys;
    sys.surface = build_surface(SurfaceKind::FineHandles, 4);
    sys.curves.push_back(vertical_curve(sys.surface, 0, Rat(1) / 2));
    sys.curves.push_back(lifted_curve(sys.surface, 1,
                                      {{trunk, Rat(0)},
                                       {trunk, y_lo},
                                       {reach, y_lo},
                                       {reach, y_hi},
                                       {trunk, y_hi},
                                       {trunk, Rat(1)}}));
    return sys;
}

// Fixture: four crossings and two nested bigons; only the middle pair is
// innermost (the left bump's disk contains a mouth).
inline CurveSystem double_bigon_system() {
    const Rat q = 1;
    CurveSystem sys;
    sys.surface = build_surface(SurfaceKind::FineHandles, 4);
    sys.curves.push_back(vertical_curve(sys.surface, 0, Rat(3) / 20));
    sys.curves.push_back(lifted_curve(sys.surface, 1,
                                      {{Rat(3) / 20, Rat(3) / 10},
                                       {Rat(7) / 25, Rat(3) / 10},
                                       {Rat(7) / 25, Rat(7) / 10},
                                       {Rat(3) / 20, Rat(7) / 10},
                                       {Rat(1) / 10, Rat(7) / 10},
                                       {Rat(1) / 10, Rat(11) / 20},
                                       {Rat(3) / 20, Rat(11) / 20},
                                       {Rat(1) / 5, Rat(11) / 20},
                                       {Rat(1) / 5, Rat(9) / 20},
                                       {Rat(3) / 20, Rat(9) / 20},
                                       {Rat(1) / 50, Rat(9) / 20},
                                       {Rat(1) / 50, Rat(3) / 10 + q},
                                       {Rat(3) / 20, Rat(3) / 10 + q}}));
    return sys;
}

// Fixture: the pair shares a vertical subsegment (infinite intersection).
inline CurveSystem overlap_system() {
    CurveSystem sys;
    sys.surface = build_surface(SurfaceKind::Torus);
    sys.curves.push_back(vertical_curve(sys.surface, 0, Rat(1) / 2));
    sys.curves.push_back(lifted_curve(sys.surface, 1,
                                      {{Rat(1) / 2, Rat(3) / 10},
                                       {Rat(1) / 2, Rat(7) / 10},
                                       {Rat(3) / 5, Rat(7) / 10},
                                       {Rat(3) / 5, Rat(13) / 10},
                                       {Rat(1) / 2, Rat(13) / 10}}));
    return sys;
}

// Uniform random graph on n vertices with edge probability 1/2.
inline SimpleGraph random_graph(std::mt19937_64& rng, int n) {
    SimpleGraph g(n);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (coin(rng)) g.set_edge(i, j);
    return g;
}

inline std::string env_or(const char* name, const std::string& fallback) {
    const char* v = std::getenv(name);
    return v ? std::string(v) : fallback;
}

inline std::string cli_path() { return env_or("FINECURVES_CLI", "finecurves"); }
inline std::string src_dir() { return env_or("FINECURVES_SRCDIR", "."); }

struct CliResult {
    int exit_code = -1;
    std::string out; // stdout only; stderr is folded in by the caller when needed
};

// Runs the CLI with the given argument string, capturing stdout (+stderr).
// `env_prefix` is prepended to the command line ("NAME=value ").
inline CliResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    CliResult r;
    const std::string cmd = env_prefix + cli_path() + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    if (status >= 0 && WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
    return r;
}

inline std::string temp_dir() {
    static int counter = 0;
    std::string dir = "fc_test_tmp_" + std::to_string(++counter);
    const std::string cmd = "mkdir -p " + dir;
    if (std::system(cmd.c_str()) != 0) return ".";
    return dir;
}

} // namespace finecurves::testhelpers
