#pragma once

#include <cstdint>

namespace catmod {

// Desk-scale guardrails; a JSON config file named by CATMOD_CONFIG can
// override any field, and CLI flags override the file.
struct Caps {
  int max_model_size = 6;
  int ef_rounds_max = 5;
  int term_algebra_cap = 10000;
  int max_sentence_depth = 4;
  int max_sentence_size = 12;
  int category_morphism_cap = 40;
  int theta_expansion_cap = 4096;
  std::uint64_t seed = 0;
};

// Defaults merged with the CATMOD_CONFIG file (loaded once).
const Caps& global_caps();

}  // namespace catmod
