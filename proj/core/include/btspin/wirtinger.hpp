#pragma once

#include "btspin/knot.hpp"
#include "btspin/presentation.hpp"

namespace btspin {

// Wirtinger presentation of the knot group: one generator per under-arc
// (over-passages merge PD arcs), one relator per crossing, written in
// trivial-word form x_out^-1 x_over^e x_in x_over^-e with e the crossing
// sign. Relators that reduce to the empty word (kinks whose arcs coincide)
// are dropped. The 0-crossing diagram yields <x1 | >.
FinitePresentation wirtinger_presentation(const KnotDiagram& d);

// Deterministic Tietze simplification: free reduction, removal of duplicate
// or trivial relators, and elimination of a generator that some relator
// mentions exactly once (lowest-index generator, lowest-index relator).
// Each removal or elimination costs one step of the budget; the result
// presents a group isomorphic to the input's.
FinitePresentation tietze_simplify(const FinitePresentation& p, int budget = 10000);

}  // namespace btspin
