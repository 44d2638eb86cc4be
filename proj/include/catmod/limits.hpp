#pragma once

#include "catmod/category.hpp"

namespace catmod {

struct Cone {
  int apex;
  std::map<int, int> legs;  // shape object -> morphism of the host
};

// All cones over the diagram, deterministic order (apex by object order,
// legs lexicographically by hom-set position).
std::vector<Cone> all_cones(const FinCategory& c, const Diagram& d);

// Exhaustive universal-property check of the candidate against every cone.
bool is_limit_cone(const FinCategory& c, const Diagram& d, const Cone& candidate);

// First limit (or colimit, via the opposite category) cone in enumeration
// order, or absent when the diagram has none. Exhaustive by construction.
std::optional<Cone> limit_of(const FinCategory& c, const Diagram& d, bool colimit = false);

}  // namespace catmod
