#include "catmod/cat_structure.hpp"

#include "catmod/errors.hpp"
#include "catmod/parser.hpp"

namespace catmod {

FinStructure structure_from_category(const FinCategory& c) {
  FinStructure s;
  s.sig = lcat_signature();
  s.carriers["o"] = c.objects;
  s.carriers["m"];
  for (const auto& m : c.morphisms) s.carriers["m"].push_back(m.id);
  for (const auto& m : c.morphisms) {
    s.funcs["dom"][{m.id}] = m.dom;
    s.funcs["rng"][{m.id}] = m.cod;
  }
  s.funcs["comp"];
  for (const auto& [gf, h] : c.comp) s.funcs["comp"][{gf.first, gf.second}] = h;
  s.funcs["Id"];
  for (const auto& [o, i] : c.ids) s.funcs["Id"][{o}] = i;
  return s;
}

FinCategory category_from_structure(const FinStructure& s) {
  if (s.sig != lcat_signature())
    fail("AxiomViolation", "structure is not over the language of categories");
  auto errs = validate_structure(s);
  if (!errs.empty()) fail("AxiomViolation", "invalid structure: " + errs.front());
  FinCategory c;
  c.objects = s.carrier("o");
  for (int m : s.carrier("m")) {
    auto d = s.apply("dom", {m});
    auto r = s.apply("rng", {m});
    c.morphisms.push_back({m, *d, *r});
  }
  auto it = s.funcs.find("comp");
  if (it != s.funcs.end())
    for (const auto& [args, val] : it->second) c.comp[{args[0], args[1]}] = val;
  auto idf = s.funcs.find("Id");
  if (idf != s.funcs.end())
    for (const auto& [args, val] : idf->second) c.ids[args[0]] = val;
  auto violations = validate_category(c);
  if (!violations.empty())
    fail("AxiomViolation", "axiom " + std::to_string(violations.front().axiom) + ": " +
                               violations.front().detail);
  return c;
}

Functor functor_from_hom(const CatPtr& c, const CatPtr& d, const Homomorphism& h) {
  Functor f;
  f.source = c;
  f.target = d;
  for (const auto& [e, v] : h.maps.at("o")) f.omap[e] = v;
  for (const auto& [e, v] : h.maps.at("m")) f.mmap[e] = v;
  return f;
}

Homomorphism hom_from_functor(const Functor& f, const StructPtr& sc, const StructPtr& sd) {
  Homomorphism h;
  h.source = sc;
  h.target = sd;
  h.strong = true;  // the category language has no relations
  h.maps["o"] = std::map<int, int>(f.omap.begin(), f.omap.end());
  h.maps["m"] = std::map<int, int>(f.mmap.begin(), f.mmap.end());
  return h;
}

std::vector<Formula> cat_axiom_sentences() {
  Signature sig = lcat_signature();
  std::vector<Formula> out;
  out.push_back(parse_formula(
      "forall x:m. forall y:m. (rng(x) = dom(y)) -> "
      "(dom(x) = dom(y o x) & rng(y) = rng(y o x))",
      sig));
  out.push_back(parse_formula(
      "forall x:m. forall y:m. forall z:m. (rng(x) = dom(y) & rng(y) = dom(z)) -> "
      "(z o y) o x = z o (y o x)",
      sig));
  out.push_back(parse_formula(
      "forall X:o. forall y:m. "
      "((dom(y) = X -> y o Id(X) = y) & (rng(y) = X -> Id(X) o y = y))",
      sig));
  return out;
}

}  // namespace catmod
