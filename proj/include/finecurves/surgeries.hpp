#pragma once
#include <string>
#include <vector>

#include "finecurves/verifier.hpp"

namespace finecurves {

// Audit record of one surgery move: the affected chart rectangle and the
// pair's meeting-point counts before and after.
struct SurgeryStep {
    std::string move;
    int chart = 0;
    RatPoint region_lo, region_hi;
    std::size_t before = 0, after = 0;
};

struct SurgeryTrace {
    std::vector<SurgeryStep> steps;
};

// Parallel copy of curve a at the given offset: each segment is translated
// along its dominant-axis normal (keeping all coordinates rational) and the
// translated lines are rejoined at their intersections. The copy is disjoint
// from a and embedded; both sides are tried, the one matching the curve's
// orientation (right of travel) first. Throws OffsetTooLarge when neither
// side yields a valid copy, i.e. the offset exceeds the curve's clearance to
// itself, to mouth squares, or to chart boundaries. The returned curve gets
// the smallest unused label.
Curve pushoff(const CurveSystem& sys, int a, const Rat& offset,
              SurgeryTrace* trace = nullptr);

// Removes one touching intersection of the pair by rerouting a within a
// small disk around the point, on the side away from b. Every other meeting
// point of the pair, and every report against a third curve, is unchanged;
// |a cap b| drops by exactly 1. Throws NotTouching when the point is not a
// touching point of the pair.
Curve remove_touching(const CurveSystem& sys, int a, int b,
                      const CanonPoint& point, SurgeryTrace* trace = nullptr);

// Removes an innermost bigon of the pair by rerouting a parallel to the
// bigon's b-arc, just outside the disk. |a cap b| drops by exactly 2 (the two
// corners); all other meeting points and all third-curve reports are
// unchanged. Throws NotInnermost when the bigon is not an innermost bigon of
// the pair as recomputed by find_bigons.
Curve remove_innermost_bigon(const CurveSystem& sys, int a, int b,
                             const Bigon& bigon, SurgeryTrace* trace = nullptr);

// A path u = c_0, c_1, ..., c_last = v in which consecutive curves meet in at
// most k points (verified before returning), of length at most 3. Requires
// |u cap v| = k + 1 finite. Follows the first applicable case: a touching
// point is removed, else an innermost bigon is removed (both yielding the
// length-3 path u, pushoff, modified u, v), else arc surgery at a crossing
// yields a length-2 path. Throws WrongIntersectionCount / InfiniteIntersection
// on bad input and NoEssentialSurgery when every surgered candidate fails
// (all arcs and both offset sides are tried).
std::vector<Curve> surgery_path(const CurveSystem& sys, int u, int v, int k,
                                SurgeryTrace* trace = nullptr);

// A curve disjoint from a whose report against b is finite with all
// crossings: a parallel pushoff of a, with any residual touching points
// against b perturbed away one by one. Throws OffsetExhausted when no offset
// on the retry ladder yields a valid witness.
Curve distance2_witness(const CurveSystem& sys, int a, int b,
                        SurgeryTrace* trace = nullptr);

} // namespace finecurves
