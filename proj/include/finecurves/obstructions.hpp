#pragma once
#include <optional>
#include <string>
#include <vector>

#include "finecurves/graph.hpp"

namespace finecurves {

// A transitive orientation of a graph: a strict partial order on the vertices
// whose comparable pairs are exactly the edges. Disjoint core-isotopic curves
// on the annulus are strictly sided and sidedness nests, so the disjointness
// graph of any such family must carry one of these.
struct SidednessModel {
    int n = 0;
    std::vector<std::pair<int, int>> order; // oriented edges (a, b) meaning a < b

    bool before(int a, int b) const;
    // Checks the full contract against g: exactly the edges oriented, one
    // direction each, irreflexive, antisymmetric, transitively closed.
    bool valid_for(const SimpleGraph& g) const;
};

// Outcome of a sidedness obstruction test. `obstruction == false` comes with
// a witnessing model; `obstruction == true` comes with a forced-alternation
// trace showing some edge orientation forcing its own reversal. A clean
// verdict is a necessary condition only, never an admissibility certificate.
struct ObstructionVerdict {
    bool obstruction = false;
    std::optional<SidednessModel> model; // present iff !obstruction
    std::vector<std::string> witness;    // forcing trace, nonempty iff obstruction
    int removed_vertex = -1;             // dominating vertex used by cone_reduce_check
};

// Backtracking search with transitivity/forcing propagation. Returns a valid
// orientation or nullopt when none exists. Throws BudgetExceeded for n > 12.
std::optional<SidednessModel> transitive_orientation(const SimpleGraph& g);

// Independent oracle: tries all 2^|E| orientations. Intended for n <= 8 (and
// small edge counts); used to cross-check the backtracker.
std::optional<SidednessModel> exhaustive_orientation(const SimpleGraph& g);

// Obstruction iff the disjointness graph has no transitive orientation, i.e.
// no family of core-isotopic annulus curves can realize it. The witness
// replays the forced left/right alternation around the offending cycle.
ObstructionVerdict annulus_core_obstruction(const SimpleGraph& g);

// Removes a dominating vertex (curve the rest must avoid, cutting the torus
// to an annulus) and applies annulus_core_obstruction to the remainder. All
// dominating vertices are tried; any obstruction makes the graph
// torus-inadmissible. Throws NoDominatingVertex when none exists.
ObstructionVerdict cone_reduce_check(const SimpleGraph& g);

// The default 6-vertex reconstruction used by generate_family("fig4"): a
// triangle {2,3,4} with pendant vertices 0-3, 1-2, 5-4. The edge set is
// configurable since only its defining properties are pinned down.
SimpleGraph fig4_graph();
SimpleGraph fig4_graph(const std::vector<std::pair<int, int>>& edges, int n = 6);

// Named inadmissible families:
//   "oddcycle:<m>"   cycle C_m, m odd >= 5
//   "wheel:<2n>"     C_{2n-1} plus a dominating hub, 2n >= 6
//   "fig4"           the reconstruction above
//   "join:<g>,<b>"   with Gamma = join(base, base):
//                    join of (2g+b-1) copies of (Gamma disjoint-union {v});
//                    base defaults to C_5
// Throws InvalidSpec on malformed text or out-of-range parameters.
SimpleGraph generate_family(const std::string& spec);

// Join family with an explicit base graph; the base must itself carry the
// annulus obstruction and have a connected complement.
SimpleGraph join_family(int g, int b, const SimpleGraph& base);

SimpleGraph cycle_graph(int m);

} // namespace finecurves
