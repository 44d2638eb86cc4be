#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "catmod/formula.hpp"
#include "catmod/signature.hpp"

namespace catmod {

// Finite multi-sorted structure. Carriers are explicit ordered id lists;
// partial functions list exactly their defined tuples.
struct FinStructure {
  Signature sig;
  std::map<std::string, std::vector<int>> carriers;
  std::map<std::string, int> consts;
  std::map<std::string, std::map<std::vector<int>, int>> funcs;
  std::map<std::string, std::set<std::vector<int>>> rels;

  bool operator==(const FinStructure&) const = default;

  const std::vector<int>& carrier(const std::string& sort) const;
  bool has_element(const std::string& sort, int e) const;
  size_t total_size() const;

  std::optional<int> apply(const std::string& fn, const std::vector<int>& args) const;
  bool holds(const std::string& rel, const std::vector<int>& args) const;
};

using StructPtr = std::shared_ptr<const FinStructure>;

inline StructPtr share(FinStructure s) { return std::make_shared<const FinStructure>(std::move(s)); }

// Empty report iff every closure condition holds.
std::vector<std::string> validate_structure(const FinStructure& m);

struct Homomorphism {
  StructPtr source, target;
  std::map<std::string, std::map<int, int>> maps;  // sort -> element map
  bool strong = false;

  int operator()(const std::string& sort, int e) const { return maps.at(sort).at(e); }
};

// Violations of the (strong) homomorphism conditions; empty iff valid.
std::vector<std::string> validate_homomorphism(const Homomorphism& h);

Homomorphism identity_hom(const StructPtr& m);
// g after f; sources/targets must match.
Homomorphism compose(const Homomorphism& g, const Homomorphism& f);
bool injective(const Homomorphism& h);
bool surjective(const Homomorphism& h);

struct Theory {
  Signature sig;
  std::vector<Formula> sentences;
};

Theory abelian_theory();
// The theory over the empty signature whose models are the n-element sets.
Theory set_n_theory(int n, const std::string& sort = "s");

// ---- assorted small constructions ----------------------------------------

FinStructure cyclic_group(int n);
// Componentwise product structure; relations hold iff they hold in both.
FinStructure direct_product(const FinStructure& a, const FinStructure& b);
// One-unary-predicate structure on {0..n-1} with P = [0, p_count).
FinStructure unary_pred_structure(int n, int p_count);
// Forgets all structure: empty signature over the same carriers.
FinStructure set_reduct(const FinStructure& m, const std::string& keep_sort = "");

}  // namespace catmod
