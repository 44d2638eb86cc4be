#include "catmod/term_algebra.hpp"

#include <functional>

#include "catmod/errors.hpp"
#include "catmod/eval.hpp"

namespace catmod {

TermAlgebra term_algebra(const Signature& sig, int cap) {
  if (!sig.single_sorted())
    fail("SortError", "term algebra in one variable requires a single-sorted signature");
  const std::string sort = sig.sorts[0];

  TermAlgebra out;
  out.algebra.sig = sig;
  auto id_of = [&](const Term& t) -> int {
    for (size_t i = 0; i < out.element_terms.size(); ++i)
      if (out.element_terms[i] == t) return static_cast<int>(i);
    return -1;
  };
  auto intern = [&](const Term& t) -> int {
    int i = id_of(t);
    if (i >= 0) return i;
    if (static_cast<int>(out.element_terms.size()) >= cap)
      fail("TermAlgebraInfinite", "term closure exceeded cap " + std::to_string(cap));
    out.element_terms.push_back(t);
    return static_cast<int>(out.element_terms.size()) - 1;
  };

  intern(Term::var(out.var_name));
  for (const auto& [cn, cs] : sig.constants) out.algebra.consts[cn] = intern(Term::constant(cn));

  // Round-based closure keeps ids in creation order, so the fixpoint is
  // deterministic. Any function of arity >= 1 makes the closure infinite,
  // which the cap detects.
  size_t frontier_start = 0;
  while (frontier_start < out.element_terms.size()) {
    size_t frontier_end = out.element_terms.size();
    for (const auto& [fn, prof] : sig.functions) {
      size_t arity = prof.args.size();
      std::vector<size_t> idx(arity, 0);
      std::function<void(size_t, bool)> rec = [&](size_t i, bool fresh) {
        if (i == arity) {
          if (!fresh && frontier_start > 0) return;  // all-old tuples were done earlier
          std::vector<Term> args;
          std::vector<int> arg_ids;
          for (size_t k = 0; k < arity; ++k) {
            args.push_back(out.element_terms[idx[k]]);
            arg_ids.push_back(static_cast<int>(idx[k]));
          }
          int v = intern(Term::app(fn, args));
          out.algebra.funcs[fn][arg_ids] = v;
          return;
        }
        for (idx[i] = 0; idx[i] < frontier_end; ++idx[i])
          rec(i + 1, fresh || idx[i] >= frontier_start);
      };
      rec(0, false);
    }
    frontier_start = frontier_end;
  }
  for (int i = 0; i < static_cast<int>(out.element_terms.size()); ++i)
    out.algebra.carriers[sort].push_back(i);
  for (const auto& [rn, profile] : sig.relations) out.algebra.rels[rn] = {};
  return out;
}

Homomorphism term_evaluation_hom(const TermAlgebra& t, const StructPtr& target, int value) {
  const std::string sort = t.algebra.sig.sorts[0];
  Homomorphism h;
  h.source = share(t.algebra);
  h.target = target;
  Env env{{t.var_name, value}};
  for (size_t i = 0; i < t.element_terms.size(); ++i) {
    auto v = eval_term(*target, t.element_terms[i], env);
    if (!v) fail("SignatureMismatch", "term evaluation undefined in target");
    h.maps[sort][static_cast<int>(i)] = *v;
  }
  return h;
}

FinStructure pullback_structure(const std::map<std::string, std::map<int, int>>& f,
                                const FinStructure& m, const FinStructure& n_reduct) {
  if (n_reduct.sig != m.sig.fct())
    fail("NotAReductHom", "N is not a structure over the function fragment of M's language");
  // f must be a homomorphism of the constant/function reducts.
  for (const auto& s : n_reduct.sig.sorts)
    for (int e : n_reduct.carrier(s)) {
      auto it = f.find(s);
      if (it == f.end() || !it->second.count(e))
        fail("NotAReductHom", "map does not cover element " + std::to_string(e) + " of sort " + s);
      if (!m.has_element(s, it->second.at(e)))
        fail("NotAReductHom", "image of element " + std::to_string(e) + " outside target carrier");
    }
  for (const auto& [cn, cs] : n_reduct.sig.constants)
    if (f.at(cs).at(n_reduct.consts.at(cn)) != m.consts.at(cn))
      fail("NotAReductHom", "constant " + cn + " not preserved");
  for (const auto& [fn, table] : n_reduct.funcs) {
    const auto& prof = n_reduct.sig.functions.at(fn);
    for (const auto& [args, val] : table) {
      std::vector<int> im(args.size());
      for (size_t i = 0; i < args.size(); ++i) im[i] = f.at(prof.args[i]).at(args[i]);
      auto bv = m.apply(fn, im);
      if (!bv || *bv != f.at(prof.result).at(val))
        fail("NotAReductHom", "function " + fn + " not preserved");
    }
  }

  FinStructure out = n_reduct;
  out.sig = m.sig;
  // Relations are the preimages under f (tuples componentwise).
  for (const auto& [rn, profile] : m.sig.relations) {
    out.rels[rn] = {};
    std::vector<const std::vector<int>*> doms;
    for (const auto& s : profile) doms.push_back(&n_reduct.carrier(s));
    std::vector<int> t(profile.size());
    std::function<void(size_t)> rec = [&](size_t i) {
      if (i == profile.size()) {
        std::vector<int> im(t.size());
        for (size_t k = 0; k < t.size(); ++k) im[k] = f.at(profile[k]).at(t[k]);
        if (m.holds(rn, im)) out.rels[rn].insert(t);
        return;
      }
      for (int x : *doms[i]) {
        t[i] = x;
        rec(i + 1);
      }
    };
    rec(0);
  }
  return out;
}

}  // namespace catmod
