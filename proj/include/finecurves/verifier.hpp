#pragma once
#include <optional>
#include <string>
#include <vector>

#include "finecurves/graph.hpp"
#include "finecurves/intersect.hpp"

namespace finecurves {

// Adjacency semantics on curve systems:
//   Fine      - adjacent iff disjoint
//   KFine(k)  - adjacent iff finitely many meeting points and at most k
//   Finitary  - adjacent iff finitely many meeting points
enum class Semantics { Fine, KFine, Finitary };

struct AdjacencySpec {
    Semantics kind = Semantics::Fine;
    int k = 2; // used when kind == KFine
};

std::string semantics_name(const AdjacencySpec& sem);
// Accepts "fine", "finitary", or "k=<int>" with k >= 1.
AdjacencySpec parse_semantics(const std::string& text);

// Intersection summary of one unordered pair of curves.
struct PairData {
    int a = 0, b = 0; // labels, a < b
    bool infinite = false;
    std::size_t points = 0; // isolated meeting points
    bool all_crossing = false;
    bool adjacent = false; // under the requested semantics
};

struct PatternResult {
    std::vector<int> labels; // sorted curve labels; vertex i <-> labels[i]
    SimpleGraph graph;       // adjacency under the requested semantics
    std::vector<PairData> pairs;
    const PairData& pair(int la, int lb) const;
};

// Recomputes the full pairwise intersection pattern of the system. Throws
// DuplicateCurve when two curves have the same image (each contained in the
// other), since they would denote the same vertex.
PatternResult induced_pattern(const CurveSystem& sys, const AdjacencySpec& sem);

// A realization claim: the system, the semantics, and the graph it is
// supposed to induce (curve labels are the graph's vertex ids 0..n-1).
struct Certificate {
    std::string surface_kind; // "torus" | "annulus" | "fine-handles"
    int surface_param = 0;    // n for fine-handles surfaces
    AdjacencySpec semantics;
    SimpleGraph claimed{0};
    std::vector<std::string> trace; // construction log, free form
    CurveSystem system;
};

struct Mismatch {
    int a = 0, b = 0; // a == b reports a per-curve failure instead of a pair
    bool expected_adjacent = false;
    PairData got;
    std::string note; // empty for plain pattern mismatches
};

struct CheckReport {
    bool ok = false;
    bool embedded_ok = false;
    bool essential_ok = false;
    bool pattern_ok = false;
    std::vector<Mismatch> mismatches;
    PatternResult pattern;
    std::string detail;
};

// Full certificate check: structural validity, every curve embedded and
// essential, and the recomputed pattern equal to the claimed graph
// label-for-label.
CheckReport check_certificate(const Certificate& cert);

// A disk bounded by one sub-arc of each curve, the two arcs meeting exactly
// at the corners. arc_a runs along curve `a` from a_from to a_to and carries
// no intersection point in its interior (the corners are consecutive along
// a); arc_b closes the loop, running along curve `b` from the corner at
// point(a_to) back to the corner at point(a_from). b_from/b_to are b's
// passages at those two corners. Innermost when no other intersection point
// of the pair lies on the closed disk.
struct Bigon {
    Passage a_from, a_to;
    Passage b_from, b_to;
    std::vector<Leg> arc_a; // sub-polyline of curve a, a_from -> a_to
    std::vector<Leg> arc_b; // sub-polyline of curve b, point(a_to) -> point(a_from)
    bool innermost = false;
};

// All bigons whose corners are consecutive intersection points along curve
// `a`. Requires a pair with finitely many meeting points, all crossings, on
// base-chart curves; otherwise NotSupported. Every innermost bigon is of this
// form, so an empty result means the pair is in minimal position.
std::vector<Bigon> find_bigons(const CurveSystem& sys, int a, int b);

// A simple closed curve contained in the union of the two curves, assembled
// from arrangement arcs, other than the two curves themselves.
struct UnionCycle {
    Curve curve;
    bool essential = false;
};

// Enumerates the simple cycles of the two-curve arrangement (other than the
// curves themselves). Same preconditions as find_bigons; throws
// CycleBudgetExceeded when the arrangement has more than `budget` cycles.
std::vector<UnionCycle> curves_in_union(const CurveSystem& sys, int a, int b,
                                        std::size_t budget = 10000);

// Lifts an open base-chart leg chain into the covering plane, starting at the
// first stored point (used to assemble arc loops).
std::vector<RatPoint> lift_leg_chain(const Surface& s, const std::vector<Leg>& legs);

} // namespace finecurves
