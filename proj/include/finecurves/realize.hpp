#pragma once
#include "finecurves/graph.hpp"
#include "finecurves/verifier.hpp"

namespace finecurves {

// Fine-semantics realization on FineHandles(n): curve i is the vertical
// x=(2i+1)/(2n); non-adjacent far pairs {i,j} detour through their handle and
// cross twice near j's mouth; non-adjacent consecutive pairs (j = i+1, or
// {0,n-1} through the seam) cross twice by a finger wiggle; adjacent pairs
// stay disjoint. Requires n >= 2.
Certificate realize_fine_torus(const SimpleGraph& g);

// KFine(k >= 2) / Finitary realization on the annulus: cores x = 1/(i+2),
// curve i's comb arms cross every earlier core twice; each non-edge pocket is
// modified, to a shared sub-segment (Finitary) or to 2m+2 >= k+1 crossings
// (KFine). Throws UnsupportedSemantics for Fine or k < 2.
Certificate realize_annulus(const SimpleGraph& g, const AdjacencySpec& sem);

// The 2N-curve half-graph system on the annulus under Fine semantics: left
// cores v_0..v_{N-1} (labels 0..N-1) and right combs w_0..w_{N-1} (labels
// N..2N-1) with v_i disjoint from w_j iff j >= i; each side is internally
// disjoint. Requires N >= 1.
Certificate half_graph_system(int N);

} // namespace finecurves
