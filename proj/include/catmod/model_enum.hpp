#pragma once

#include "catmod/structure.hpp"

namespace catmod {

// A fixed byte-style encoding of a complete structure: carrier sizes,
// constant values, function tables in lexicographic tuple order (-1 for
// undefined entries), then relation characteristic vectors.
std::vector<int> structure_encoding(const FinStructure& m);

// Lexicographically least encoding over all per-sort carrier permutations,
// together with the permuted structure realizing it. Carriers must be
// initial segments 0..k-1.
FinStructure canonical_form(const FinStructure& m);

// One representative per isomorphism class of the models of T with every
// carrier a nonempty initial segment of size <= max_size; representatives
// are canonical forms in enumeration order. Backtracks over interpretation
// tables, pruning with the universal sentences of T on partial tables.
// Errors: BoundsExceeded when max_size exceeds the cap.
std::vector<FinStructure> enumerate_models(const Theory& t, int max_size, int size_cap = 6);

}  // namespace catmod
