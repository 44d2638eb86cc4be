#pragma once

#include "catmod/category.hpp"

namespace catmod {

// Object isomorphism classes; each class lists the chosen representative
// (least object id) first.
std::vector<std::vector<int>> object_iso_classes(const FinCategory& c);

// Inverse of an isomorphism, if any.
std::optional<int> inverse_morphism(const FinCategory& c, int m);
bool is_isomorphism(const FinCategory& c, int m);

struct SkeletonResult {
  CatPtr skeleton;           // full subcategory on the representatives
  Functor projection;        // full, faithful, surjective on objects
  std::map<int, int> rep;    // object -> its representative
  std::map<int, int> sigma;  // object A -> chosen iso rep(A) -> A
};

SkeletonResult skeleton_of(const CatPtr& c);

struct EquivalenceWitness {
  Functor to;                 // C -> D
  Functor from;               // D -> C
  std::map<int, int> unit;    // A -> iso A -> from(to(A)) in C
  std::map<int, int> counit;  // B -> iso to(from(B)) -> B in D
};

// Present iff the skeletons are isomorphic as structures over the category
// language; the witness functors are assembled from the skeleton data.
std::optional<EquivalenceWitness> are_equivalent(const CatPtr& c, const CatPtr& d);

}  // namespace catmod
