#include "catmod/config.hpp"

#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace catmod {

namespace {
Caps load() {
  Caps caps;
  const char* path = std::getenv("CATMOD_CONFIG");
  if (!path) return caps;
  std::ifstream in(path);
  if (!in) return caps;
  std::ostringstream ss;
  ss << in.rdbuf();
  auto j = nlohmann::json::parse(ss.str(), nullptr, false);
  if (j.is_discarded()) return caps;
  caps.max_model_size = j.value("max_model_size", caps.max_model_size);
  caps.ef_rounds_max = j.value("ef_rounds_max", caps.ef_rounds_max);
  caps.term_algebra_cap = j.value("term_algebra_cap", caps.term_algebra_cap);
  caps.max_sentence_depth = j.value("max_sentence_depth", caps.max_sentence_depth);
  caps.max_sentence_size = j.value("max_sentence_size", caps.max_sentence_size);
  caps.category_morphism_cap = j.value("category_morphism_cap", caps.category_morphism_cap);
  caps.theta_expansion_cap = j.value("theta_expansion_cap", caps.theta_expansion_cap);
  caps.seed = j.value("seed", caps.seed);
  return caps;
}
}  // namespace

const Caps& global_caps() {
  static Caps caps = load();
  return caps;
}

}  // namespace catmod
