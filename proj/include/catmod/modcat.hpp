#pragma once

#include "catmod/category.hpp"
#include "catmod/structure.hpp"

namespace catmod {

// A finite truncation of the category of models of a theory: object i is
// models[i], morphism ids index homs.
struct ModelCategory {
  CatPtr cat;
  std::vector<FinStructure> models;   // object id -> model (canonical form)
  std::vector<Homomorphism> homs;     // morphism id -> homomorphism
  Theory theory;
  int max_size = 0;
  bool strong = false;

  StructPtr model_ptr(int object) const;
};

ModelCategory build_model_category(const Theory& t, int max_size, bool strong = false,
                                   int size_cap = 6);

struct CoequalizerResult {
  FinStructure quotient;
  Homomorphism projection;
  std::vector<std::vector<int>> classes;  // element classes of the target carrier
};

// Quotient of the common target by the congruence closure of x ~ x' for
// x = f(a), x' = g(a); relations are pushed forward existentially.
// The projection p satisfies p.f = p.g and is the universal such map.
// Errors: NotParallel.
CoequalizerResult coequalizer(const Homomorphism& f, const Homomorphism& g);

// Brute-force verification of the coequalizer universal property against
// the given targets: every q with q.f = q.g factors uniquely through p.
std::vector<std::string> coequalizer_universal_report(const Homomorphism& f,
                                                      const Homomorphism& g,
                                                      const CoequalizerResult& coeq,
                                                      const std::vector<StructPtr>& targets);

struct CoproductResult {
  FinStructure sum;
  std::vector<Homomorphism> injections;
};

// Disjoint union with componentwise interpretation; the signature must have
// no constants and only unary function symbols. Errors: SignatureNotUnary.
CoproductResult coproduct_unary(const std::vector<StructPtr>& ms);

std::vector<std::string> coproduct_universal_report(const CoproductResult& cp,
                                                    const std::vector<StructPtr>& targets);

// All expansions of the one-variable term algebra over fct(sig) by relation
// interpretations. Errors: TermAlgebraInfinite, BoundsExceeded.
std::vector<FinStructure> theta_family(const Signature& sig, int expansion_cap = 4096);

// ---- bundles ---------------------------------------------------------------

// Serializes to a directory: category.json (morphism records carry their
// maps), models/M*.json, meta.json.
void write_bundle(const ModelCategory& mc, const std::string& dir);
ModelCategory read_bundle(const std::string& dir);

}  // namespace catmod
