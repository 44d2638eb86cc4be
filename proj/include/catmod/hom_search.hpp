#pragma once

#include <optional>
#include <vector>

#include "catmod/structure.hpp"

namespace catmod {

// Backtracking enumeration of all (strong) homomorphisms A -> B, in the
// deterministic order induced by carrier positions. Must coincide with the
// brute-force filter over all carrier maps (tested on small instances).
std::vector<Homomorphism> enumerate_homomorphisms(const StructPtr& a, const StructPtr& b,
                                                  bool strong = false);

// A bijective strong homomorphism with two-sided inverse, or absent.
std::optional<Homomorphism> are_isomorphic(const StructPtr& a, const StructPtr& b);

}  // namespace catmod
