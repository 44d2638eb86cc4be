#pragma once

#include "catmod/formula.hpp"
#include "catmod/modcat.hpp"
#include "catmod/structure.hpp"

namespace catmod {

struct FilterOnX {
  std::vector<int> x;                  // index set
  std::set<std::set<int>> members;
  bool ultra = false;
};

// Proper, intersection- and superset-closed; if flagged ultra, decides every
// subset. Empty iff valid. A proper filter on a finite set is principal at
// its least member (the core).
std::vector<std::string> validate_filter(const FilterOnX& f);
std::set<int> filter_core(const FilterOnX& f);

FilterOnX principal_ultrafilter(const std::vector<int>& x, int at);
FilterOnX trivial_filter(const std::vector<int>& x);  // {X}: the direct product

// Exactly the principal ultrafilters, one per point. Errors: BoundsExceeded.
std::vector<FilterOnX> enumerate_ultrafilters(const std::vector<int>& x, int size_cap = 6);

struct ReducedProduct {
  FinStructure quotient;
  // sort -> class id -> canonical representative family (indexed like X);
  // the representative is the lexicographically least member of the class.
  std::map<std::string, std::vector<std::vector<int>>> class_reps;
  std::vector<bool> core_mask;  // positions belonging to the filter core

  int class_of(const std::string& sort, const std::vector<int>& family) const;
};

// Cartesian product modulo F-agreement; relations hold iff their agreement
// set is in F; partial functions cross as graphs (defined iff almost
// everywhere defined). Errors: SignatureMismatch, ImproperFilter.
ReducedProduct reduced_product(const std::vector<StructPtr>& ms, const FilterOnX& f);

struct LosReport {
  bool product_truth = false;
  std::set<int> truth_set;  // indices where the factor satisfies the sentence
  bool almost_everywhere = false;
  bool ok = false;  // product_truth == almost_everywhere
};

LosReport los_verify(const std::vector<StructPtr>& ms, const FilterOnX& u, const Formula& sentence,
                     int depth_cap = 3);

// element -> class of the constant family, into the ultrapower of m.
struct DiagonalEmbedding {
  ReducedProduct power;
  Homomorphism embedding;
};
DiagonalEmbedding diagonal_embedding(const StructPtr& m, const FilterOnX& u);

// The ultrapower of a model-category bundle as a category, with the functor
// into structures: objects to reduced products of their representing
// families, morphisms to the induced maps on classes. The underlying-set
// functor computed through set reducts must match carrier-for-carrier.
struct UltrapowerEmbedding {
  CatPtr ultrapower;
  std::vector<std::vector<int>> object_reps;    // object -> representing family
  std::vector<std::vector<int>> morphism_reps;  // morphism -> representing family
  std::vector<FinStructure> object_structure;   // object -> i(object)
  std::vector<Homomorphism> morphism_hom;       // morphism -> i(morphism)
  std::vector<FinStructure> underlying_sets;    // object -> |object| via set reducts

  std::vector<std::string> problems;  // non-empty = construction self-check failed
};

UltrapowerEmbedding ultrapower_embedding(const ModelCategory& bundle, const FilterOnX& u);

}  // namespace catmod
