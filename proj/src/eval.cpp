#include "catmod/eval.hpp"

#include "catmod/errors.hpp"

namespace catmod {

namespace {

struct TermVal {
  bool defined;
  int value;
  std::string sort;
};

TermVal eval_term_sorted(const FinStructure& m, const Term& t, const Env& env) {
  switch (t.kind) {
    case Term::Kind::Var: {
      auto it = env.find(t.name);
      if (it == env.end()) fail("UnboundVariable", "variable " + t.name + " not in environment");
      // The variable's sort is unknown here; atoms that need it resolve it
      // through the symbol profiles around it. Marked empty.
      return {true, it->second, ""};
    }
    case Term::Kind::Const: {
      auto s = m.sig.constants.find(t.name);
      if (s == m.sig.constants.end())
        fail("SignatureMismatch", "constant " + t.name + " not in structure signature");
      auto v = m.consts.find(t.name);
      if (v == m.consts.end()) fail("SignatureMismatch", "constant " + t.name + " uninterpreted");
      return {true, v->second, s->second};
    }
    case Term::Kind::App: {
      auto p = m.sig.functions.find(t.name);
      if (p == m.sig.functions.end())
        fail("SignatureMismatch", "function " + t.name + " not in structure signature");
      if (p->second.args.size() != t.args.size())
        fail("SignatureMismatch", "function " + t.name + " arity mismatch");
      std::vector<int> args(t.args.size());
      for (size_t i = 0; i < t.args.size(); ++i) {
        TermVal v = eval_term_sorted(m, t.args[i], env);
        if (!v.defined) return {false, 0, p->second.result};
        args[i] = v.value;
      }
      auto v = m.apply(t.name, args);
      if (!v) return {false, 0, p->second.result};
      return {true, *v, p->second.result};
    }
  }
  return {false, 0, ""};
}

bool eval_rec(const FinStructure& m, const Formula& f, Env& env) {
  switch (f.kind) {
    case Formula::Kind::Atom: {
      auto p = m.sig.relations.find(f.name);
      if (p == m.sig.relations.end())
        fail("SignatureMismatch", "relation " + f.name + " not in structure signature");
      if (p->second.size() != f.terms.size())
        fail("SignatureMismatch", "relation " + f.name + " arity mismatch");
      std::vector<int> args(f.terms.size());
      for (size_t i = 0; i < f.terms.size(); ++i) {
        TermVal v = eval_term_sorted(m, f.terms[i], env);
        if (!v.defined) return false;
        args[i] = v.value;
      }
      return m.holds(f.name, args);
    }
    case Formula::Kind::Eq: {
      TermVal l = eval_term_sorted(m, f.terms[0], env);
      if (!l.defined) return false;
      TermVal r = eval_term_sorted(m, f.terms[1], env);
      if (!r.defined) return false;
      return l.value == r.value;
    }
    case Formula::Kind::Not:
      return !eval_rec(m, f.sub[0], env);
    case Formula::Kind::And:
      return eval_rec(m, f.sub[0], env) && eval_rec(m, f.sub[1], env);
    case Formula::Kind::Or:
      return eval_rec(m, f.sub[0], env) || eval_rec(m, f.sub[1], env);
    case Formula::Kind::Implies:
      return !eval_rec(m, f.sub[0], env) || eval_rec(m, f.sub[1], env);
    case Formula::Kind::Iff:
      return eval_rec(m, f.sub[0], env) == eval_rec(m, f.sub[1], env);
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      if (!m.sig.has_sort(f.var_sort))
        fail("SignatureMismatch", "quantifier sort " + f.var_sort + " not in structure signature");
      bool uni = f.kind == Formula::Kind::Forall;
      auto saved = env.find(f.name) != env.end() ? std::optional<int>(env[f.name]) : std::nullopt;
      bool result = uni;
      for (int e : m.carrier(f.var_sort)) {
        env[f.name] = e;
        bool v = eval_rec(m, f.sub[0], env);
        if (uni && !v) {
          result = false;
          break;
        }
        if (!uni && v) {
          result = true;
          break;
        }
      }
      if (saved)
        env[f.name] = *saved;
      else
        env.erase(f.name);
      return result;
    }
  }
  return false;
}

}  // namespace

std::optional<int> eval_term(const FinStructure& m, const Term& t, const Env& env) {
  TermVal v = eval_term_sorted(m, t, env);
  if (!v.defined) return std::nullopt;
  return v.value;
}

bool eval_formula(const FinStructure& m, const Formula& f, const Env& env) {
  Env e = env;
  return eval_rec(m, f, e);
}

bool satisfies(const FinStructure& m, const Theory& t) {
  for (const auto& s : t.sentences)
    if (!eval_formula(m, s)) return false;
  return true;
}

}  // namespace catmod
