#pragma once

#include <cstdint>

#include "catmod/category.hpp"
#include "catmod/eval.hpp"
#include "catmod/formula.hpp"
#include "catmod/structure.hpp"

namespace catmod {

// A thin wide subcategory of isomorphisms: one chosen iso per ordered pair
// of isomorphic objects, identities as the only automorphisms, closed under
// composition.
struct IsoGraph {
  CatPtr host;
  std::map<std::pair<int, int>, int> chosen;  // (from, to) -> morphism
};

std::vector<std::string> validate_isograph(const IsoGraph& g);

// Per iso class: representative R (least id), chosen isos sigma_A: R -> A
// (identity at R, least iso id otherwise); chosen(A,B) = sigma_B . sigma_A^-1.
IsoGraph build_isograph(const CatPtr& c);

// All iso-graphs, at most `cap` of them (they are parametrized by the choice
// of sigma maps per class).
std::vector<IsoGraph> enumerate_isographs(const CatPtr& c, size_t cap = 128);

// Whether some iso-graph of the host contains the given morphisms.
// Errors: BoundsExceeded when more than max_seed morphisms are given.
bool extends_to_isograph(const CatPtr& c, const std::vector<int>& seed, size_t max_seed = 8);

// The quasi-composition predicate: QC(f,g,h) iff the six-arrow diagram
// commutes with the iso-graph verticals drawn from g.
bool qc_holds(const FinCategory& c, const IsoGraph& g, int f, int gm, int h);

// p isomorphic-over-the-iso-graph to q (conjugation by the chosen isos);
// on parallel pairs this collapses to equality.
bool quasi_equal(const FinCategory& c, const IsoGraph& g, int p, int q);
// p, viewed as a quasi-morphism from `from` to `to`.
bool is_quasi_morphism(const FinCategory& c, const IsoGraph& g, int p, int from, int to);

// The category as a structure over the homotopic language: one sort m with
// the ternary QC table.
FinStructure qc_structure(const FinCategory& c, const IsoGraph& g);

// Evaluation of an equality-free formula over the homotopic language on the
// category with the given iso-graph. Errors: EqualityForbidden.
bool eval_homotopic(const FinCategory& c, const IsoGraph& g, const Formula& f, const Env& env = {});

// Quasi-limit: some iso-graph arrow x out of an apex carries a quasi-cone
// that is quasi-universal with quasi-unique mediators. Equals limit
// existence. Errors: BoundsExceeded on oversized shapes.
bool qlim_holds(const FinCategory& c, const IsoGraph& g, const Diagram& d,
                size_t max_shape_objects = 3, size_t max_shape_morphisms = 9);

struct AgreementCertificate {
  Formula sentence;
  bool value_c;
  bool value_d;
};

struct AgreementReport {
  std::uint64_t space = 0;    // enumeration space size
  std::uint64_t checked = 0;  // sentences actually evaluated
  bool exhaustive = false;
  std::vector<AgreementCertificate> mismatches;
};

// Compares homotopic sentence truth on two categories (with their built
// iso-graphs): exhaustive within budget, else seeded uniform samples.
AgreementReport agreement_test(const CatPtr& c, const CatPtr& d, int depth, int max_size,
                               std::uint64_t budget, std::uint64_t seed);

// Translation of a formula over the category language to the homotopic
// language: object quantifiers relativize to iso-graph arrows, composites
// flatten through QC, equality becomes the definable isomorphism relation.
// Sound on skeletal categories with the discrete iso-graph.
Formula translate_lcat(const Formula& f);

}  // namespace catmod
