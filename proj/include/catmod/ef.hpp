#pragma once

#include "catmod/structure.hpp"

namespace catmod {

// Function symbols replaced by their graph relations (same names, arity+1);
// constants are kept.
FinStructure relationalize(const FinStructure& m);

// True iff Duplicator wins the k-round Ehrenfeucht-Fraisse game on the
// relationalized structures. k is capped (default 5) per configuration.
bool ef_equivalent(const FinStructure& a, const FinStructure& b, int rounds, int rounds_cap = 5);

}  // namespace catmod
