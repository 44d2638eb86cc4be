#pragma once

#include <string>
#include <vector>

#include "catmod/abcheck.hpp"
#include "catmod/category.hpp"
#include "catmod/modcat.hpp"
#include "catmod/structure.hpp"

namespace fixtures {

using catmod::CatPtr;
using catmod::FinCategory;
using catmod::FinStructure;

struct NamedCategory {
  std::string name;
  CatPtr cat;
};

// ---- individual categories -------------------------------------------------

CatPtr empty_category();
CatPtr terminal_category();
CatPtr discrete_category(int n);
CatPtr arrow_category();          // A -> B with identities
int arrow_morphism_id();          // the non-identity arrow in arrow_category
CatPtr parallel_pair_category();  // A => B
CatPtr composable_chain();        // A -> B -> C, free
CatPtr span_category();           // A <- C -> B
CatPtr cospan_category();         // A -> C <- B
CatPtr walking_iso();             // two isomorphic objects, trivial automorphisms
CatPtr triangle_groupoid();       // three pairwise isomorphic objects, thin
CatPtr group_category(const FinStructure& group);  // one object, arrows = elements
CatPtr cyclic_group_category(int n);
CatPtr klein_four_category();
CatPtr idempotent_monoid_category();  // {1, e}, e e = e
CatPtr chain_poset(int n);
CatPtr diamond_poset();        // 2^2 as a meet-semilattice (binary products)
CatPtr divisor_poset_12();     // divisibility on {1,2,3,4,6,12}
CatPtr sets_category(const std::vector<int>& sizes);  // objects = given sizes, all maps
CatPtr two_labeled_doubletons();                      // two copies of a 2-element set
CatPtr indiscrete_z2_groupoid();  // two objects, every hom-set a Z/2 torsor

// The abelian-groups fixture {0, Z/2, V4} as a full subcategory of the
// size-<=4 model category, plus the data the AB tests need.
struct AbFixture {
  CatPtr cat;
  int zero_obj;
  int z2_obj;
  int v4_obj;
  catmod::ProductCone v4_as_square;  // V4 with projections as Z/2 x Z/2
};
AbFixture ab_fixture();

// ---- bundles -----------------------------------------------------------------

catmod::ModelCategory set_bundle(int n);                  // SET^n, size cap n
catmod::ModelCategory abelian_bundle(int max_size);
catmod::ModelCategory unary_pred_bundle(int max_size, bool strong);

// ---- the corpus ---------------------------------------------------------------

// 25+ fixture categories, each within the 40-morphism exhaustive-check cap.
const std::vector<NamedCategory>& fixture_corpus();

// Pairs (C, skeleton(C)) with a non-trivial skeleton come first.
std::vector<NamedCategory> skeleton_pairs_corpus();

// The category-language structure of a category (shared helper).
FinStructure lcat_structure_of(const FinCategory& c);

// Mutations breaking exactly one category axiom.
FinCategory break_dom_cod(const FinCategory& c);        // axiom 1
FinCategory break_associativity(const FinCategory& c);  // axiom 2
FinCategory break_identity(const FinCategory& c);       // axiom 3

}  // namespace fixtures
