#pragma once
#include "finecurves/verifier.hpp"

namespace finecurves {

// Realizes g on the bare torus (genus 1) under the disjointness semantics:
// vertical trunks in a searched cyclic order, plus one horizontal band per
// non-edge that crosses its target trunk twice. A band may sweep over other
// trunks, which is harmless exactly when they are non-neighbors of the
// banding curve, so the search looks for a cyclic placement where every
// non-edge has a clear side. Throws NotRealized when no placement works and
// BudgetExceeded for n > 8 (the search is factorial in n).
Certificate realize_small_torus(const SimpleGraph& g);

// One verified Fine-semantics torus certificate per isomorphism class of
// graphs on n vertices, 1 <= n <= 5, in the enumeration order of
// isomorphism_classes.
std::vector<Certificate> catalog_small_torus(int n);

} // namespace finecurves
