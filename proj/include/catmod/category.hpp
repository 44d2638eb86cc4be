#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace catmod {

struct MorphismRec {
  int id;
  int dom;
  int cod;

  bool operator==(const MorphismRec&) const = default;
};

// Finite category: explicit objects and morphism records, a sparse
// composition table on composable pairs, and chosen identities.
// Hom-sets are disjoint by construction (morphisms carry dom/cod).
struct FinCategory {
  std::vector<int> objects;
  std::vector<MorphismRec> morphisms;
  std::map<std::pair<int, int>, int> comp;  // (g, f) -> g after f
  std::map<int, int> ids;                   // object -> identity morphism

  bool operator==(const FinCategory&) const = default;

  const MorphismRec* morphism(int id) const;
  int dom(int m) const { return morphism(m)->dom; }
  int cod(int m) const { return morphism(m)->cod; }
  bool has_object(int o) const;
  std::optional<int> compose(int g, int f) const;  // g after f
  std::vector<int> hom(int a, int b) const;
  bool is_identity(int m) const;
};

using CatPtr = std::shared_ptr<const FinCategory>;

inline CatPtr share(FinCategory c) { return std::make_shared<const FinCategory>(std::move(c)); }

struct CatViolation {
  int axiom;  // 0 = structural well-formedness, 1..3 = category axioms
  std::string detail;
};

// Axiom 1: dom/cod of composites; axiom 2: associativity on composable
// triples; axiom 3: identity laws. Structural defects (dangling ids, a
// composable pair missing its composite is axiom 1 by the partial-function
// reading) are reported with the axiom they break.
std::vector<CatViolation> validate_category(const FinCategory& c);

FinCategory opposite(const FinCategory& c);
FinCategory full_subcategory(const FinCategory& c, const std::vector<int>& objects);
// Left ids keep their values; right ids are shifted above them.
FinCategory disjoint_union(const FinCategory& a, const FinCategory& b);

struct Functor {
  CatPtr source, target;
  std::map<int, int> omap;
  std::map<int, int> mmap;

  int obj(int o) const { return omap.at(o); }
  int mor(int m) const { return mmap.at(m); }
};

std::vector<std::string> validate_functor(const Functor& f);
bool functor_faithful(const Functor& f);
bool functor_full(const Functor& f);
bool functor_injective_on_objects(const Functor& f);
Functor identity_functor(const CatPtr& c);
Functor compose_functors(const Functor& g, const Functor& f);

struct Diagram {
  CatPtr shape;
  Functor j;  // j.source == shape, j.target == host
};

std::vector<std::string> validate_diagram(const Diagram& d);

// Common shapes.
Diagram discrete_pair_diagram(const CatPtr& host, int a, int b);
Diagram parallel_pair_diagram(const CatPtr& host, int f, int g);
Diagram empty_diagram(const CatPtr& host);

}  // namespace catmod
