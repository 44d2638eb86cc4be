#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "catmod/formula.hpp"
#include "catmod/signature.hpp"

namespace catmod {

struct EnumLimits {
  int max_depth = 2;   // quantifier depth, hard cap 4
  int max_size = 8;    // AST node count, hard cap 12
  bool homotopic = false;  // forbid equality atoms
};

// Deterministic enumeration of sentences (closed formulas) over a
// signature, by total AST size then a fixed production order. Bound
// variables are named canonically x0, x1, ... by binder nesting level, so
// each alpha-class appears exactly once. Commutative connectives are not
// deduplicated.
class SentenceEnumerator {
public:
  SentenceEnumerator(Signature sig, EnumLimits lims);  // throws BoundsExceeded

  std::uint64_t count();
  // Stops early when the callback returns false.
  void for_each(const std::function<bool(const Formula&)>& yield);
  Formula unrank(std::uint64_t index);  // 0 <= index < count()

private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

// The full enumeration when it fits the budget, otherwise `budget` seeded
// uniform draws over the enumeration index space (repeats possible).
std::vector<Formula> sample_sentences(const Signature& sig, const EnumLimits& lims,
                                      std::uint64_t budget, std::uint64_t seed,
                                      bool* exhaustive = nullptr);

}  // namespace catmod
