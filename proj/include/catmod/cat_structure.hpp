#pragma once

#include "catmod/category.hpp"
#include "catmod/structure.hpp"

namespace catmod {

// The category as a structure over the language of categories: carrier o =
// objects, carrier m = morphisms, comp partial on composable pairs.
FinStructure structure_from_category(const FinCategory& c);

// Converse direction; the structure must satisfy the category axioms.
// Errors: AxiomViolation (with the first violation's axiom in the message).
FinCategory category_from_structure(const FinStructure& s);

// L_cat homomorphisms <-> functors: the functor induced by a homomorphism
// between the structure encodings of two categories.
Functor functor_from_hom(const CatPtr& c, const CatPtr& d, const Homomorphism& h);
Homomorphism hom_from_functor(const Functor& f, const StructPtr& sc, const StructPtr& sd);

// The three category axioms as sentences over the category language; used
// to cross-check the direct validator against formula evaluation.
std::vector<Formula> cat_axiom_sentences();

}  // namespace catmod
