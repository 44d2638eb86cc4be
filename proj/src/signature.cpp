#include "catmod/signature.hpp"

#include <algorithm>
#include <set>

namespace catmod {

bool Signature::has_sort(const std::string& s) const {
  return std::find(sorts.begin(), sorts.end(), s) != sorts.end();
}

bool Signature::has_symbol(const std::string& name) const {
  return constants.count(name) || functions.count(name) || relations.count(name);
}

std::vector<std::string> Signature::validate() const {
  std::vector<std::string> out;
  std::set<std::string> seen_sorts;
  for (const auto& s : sorts) {
    if (!seen_sorts.insert(s).second) out.push_back("duplicate sort: " + s);
  }
  std::set<std::string> names;
  auto claim = [&](const std::string& n, const char* kind) {
    if (!names.insert(n).second)
      out.push_back(std::string("symbol name reused across kinds: ") + n + " (" + kind + ")");
  };
  for (const auto& [n, s] : constants) {
    claim(n, "constant");
    if (!has_sort(s)) out.push_back("constant " + n + " has undeclared sort " + s);
  }
  for (const auto& [n, p] : functions) {
    claim(n, "function");
    for (const auto& a : p.args)
      if (!has_sort(a)) out.push_back("function " + n + " has undeclared argument sort " + a);
    if (!has_sort(p.result)) out.push_back("function " + n + " has undeclared result sort " + p.result);
  }
  for (const auto& [n, as] : relations) {
    claim(n, "relation");
    for (const auto& a : as)
      if (!has_sort(a)) out.push_back("relation " + n + " has undeclared argument sort " + a);
  }
  return out;
}

Signature Signature::fct() const {
  Signature r;
  r.sorts = sorts;
  r.constants = constants;
  r.functions = functions;
  return r;
}

Signature lcat_signature() {
  Signature sig;
  sig.sorts = {"o", "m"};
  sig.functions["comp"] = {{"m", "m"}, "m", true};
  sig.functions["dom"] = {{"m"}, "o", false};
  sig.functions["rng"] = {{"m"}, "o", false};
  sig.functions["Id"] = {{"o"}, "m", false};
  return sig;
}

Signature lhomo_signature() {
  Signature sig;
  sig.sorts = {"m"};
  sig.relations["QC"] = {"m", "m", "m"};
  return sig;
}

Signature group_signature() {
  Signature sig;
  sig.sorts = {"g"};
  sig.constants["zero"] = "g";
  sig.functions["add"] = {{"g", "g"}, "g", false};
  sig.functions["neg"] = {{"g"}, "g", false};
  return sig;
}

}  // namespace catmod
