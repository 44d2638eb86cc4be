#pragma once

#include "catmod/category.hpp"
#include "catmod/structure.hpp"

namespace catmod {

struct ProductCone {
  int apex;
  int p1;
  int p2;
};

// The unique null object (unique arrows to and from every object), if any.
std::optional<int> find_null_object(const FinCategory& c);
// The zero morphism a -> null -> b.
int zero_morphism(const FinCategory& c, int null_obj, int a, int b);

struct GroupArrowResult {
  std::vector<int> arrows;        // morphisms apex -> G passing the axioms
  bool associativity_checked;     // false when no triple product exists
};

// Morphisms mu: GxG -> G satisfying the group-arrow axioms (associativity,
// unit, inverse, commutativity); the cone must be a verified product of
// (G, G). Associativity needs a triple product in the category; by default
// its absence is recorded rather than fatal, strict mode raises.
// Errors: NoNullObject, NoProductCone, MissingTripleProduct (strict).
GroupArrowResult group_arrows(const FinCategory& c, int g, const ProductCone& cone,
                              bool strict_associativity = false);

struct AbReport {
  bool products = true;
  std::vector<std::pair<int, int>> missing_products;
  bool null_object = false;
  bool generator = false;
  // object -> number of group arrows (only objects whose square product
  // exists); Ab1 wants exactly one everywhere.
  std::map<int, int> group_arrow_counts;
  bool ab1 = true;
  bool ab2 = true;
  std::vector<std::string> notes;
  bool verdict = false;
};

// Finite categories closed under products are degenerate (|GxG| = |G|^2
// forces one-element objects), so the per-axiom report is the useful
// output; the verdict is their conjunction.
AbReport check_ab(const FinCategory& c);

struct ExtractedGroups {
  std::map<int, FinStructure> groups;       // object -> abelian group on Hom(I, G)
  std::map<int, std::vector<int>> elements; // object -> morphism ids forming the carrier
  std::map<int, Homomorphism> morphisms;    // morphism -> induced group homomorphism
};

// The hom-functor at a generator I, with addition induced by the unique
// group arrows (directly where GxG exists, componentwise through a
// recorded product decomposition otherwise).
// Errors: AxiomFailure naming the failing axiom/object.
ExtractedGroups extract_groups(const FinCategory& c, int generator);

// All additive monoidal operations with neutral zero on a finite abelian
// group, found through endomorphism pairs and filtered by the unit and
// commutativity axioms; always exactly the group's own addition.
// Errors: NotAGroup, BoundsExceeded (carrier larger than the cap).
std::vector<std::map<std::pair<int, int>, int>> concrete_group_arrows(const FinStructure& g,
                                                                      int size_cap = 32);

}  // namespace catmod
