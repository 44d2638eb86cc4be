#pragma once

#include "catmod/category.hpp"

namespace catmod {

// Distinct parallel pairs (f, g) with f < g.
std::vector<std::pair<int, int>> parallel_pairs(const FinCategory& c);

// Separation: for every distinct parallel f, g: A => B some a: I -> A has
// f.a != g.a. Generators additionally reach every object (Hom(I, A)
// nonempty), so the hom-functor is an embedding on objects.
bool separates(const FinCategory& c, const std::vector<int>& family);
bool is_generator(const FinCategory& c, int candidate);
std::vector<int> find_generators(const FinCategory& c);

struct GeneratingFamily {
  std::vector<int> members;
  bool locally_unique;  // every object receives arrows from exactly one member
};

// Inclusion-minimal covering + separating families, by size then
// lexicographically.
std::vector<GeneratingFamily> minimal_generating_families(const FinCategory& c,
                                                          size_t max_families = 64);

}  // namespace catmod
