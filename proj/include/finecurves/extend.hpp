#pragma once

#include <variant>

#include "finecurves/verifier.hpp"

namespace finecurves {

// Certificate extension rules. Each rule adds vertices to the claimed graph
// and curves realizing them, then re-verifies the whole certificate.
//
//  - AddIsolated: new vertex of degree zero; its curve crosses every
//    existing curve.
//  - AddPendant{u}: new vertex adjacent only to u; its curve is disjoint
//    from u's curve and crosses all others.
//  - AddCopycat{w}: new vertex with the same neighbourhood as w and not
//    adjacent to w; its curve is a parallel copy of w's curve with a bump
//    crossing w twice.
//  - BlowupClique{w, m}: w becomes an m-clique of parallel copies sharing
//    w's neighbourhood; requires every intersecting pair of the input to
//    meet in finitely many crossings.
//  - ConeClique{w, m}: AddPendant{w} followed by BlowupClique on the
//    pendant: an m-clique whose members are all adjacent to w only.
struct AddIsolated {};
struct AddPendant {
    int u = 0;
};
struct AddCopycat {
    int w = 0;
};
struct BlowupClique {
    int w = 0;
    int m = 2;
};
struct ConeClique {
    int w = 0;
    int m = 2;
};

using ExtendRule =
    std::variant<AddIsolated, AddPendant, AddCopycat, BlowupClique, ConeClique>;

// Extends a verified Fine-semantics certificate by one rule. New vertices
// take the next free labels. The result is re-verified before it is
// returned; throws RuleInapplicable when the input does not verify, has the
// wrong semantics, or no placement of the new curves passes verification.
Certificate extend(const Certificate& cert, const ExtendRule& rule);

} // namespace finecurves
