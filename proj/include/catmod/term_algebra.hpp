#pragma once

#include "catmod/structure.hpp"

namespace catmod {

struct TermAlgebra {
  FinStructure algebra;             // relations all empty
  std::vector<Term> element_terms;  // carrier id -> the term it denotes
  std::string var_name = "x";
};

// The term algebra in one variable x over a single-sorted signature;
// elements are the closure of {x} and the constants under the function
// symbols. Errors: TermAlgebraInfinite when the fixpoint exceeds the cap.
TermAlgebra term_algebra(const Signature& sig, int cap = 10000);

// The unique element map from the term algebra sending x to `value`,
// i.e. term evaluation. Target must interpret the function/constant part.
Homomorphism term_evaluation_hom(const TermAlgebra& t, const StructPtr& target, int value);

// f* M: the unique expansion of the fct(L)-structure N making f a strong
// L-homomorphism into M. f maps N's carriers into M's.
// Errors: NotAReductHom when f does not preserve constants/functions.
FinStructure pullback_structure(const std::map<std::string, std::map<int, int>>& f,
                                const FinStructure& m, const FinStructure& n_reduct);

}  // namespace catmod
