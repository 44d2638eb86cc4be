#include "catmod/formula.hpp"

#include <algorithm>

namespace catmod {

int Term::node_count() const {
  int n = 1;
  for (const auto& a : args) n += a.node_count();
  return n;
}

void Term::collect_vars(std::vector<std::string>& out) const {
  if (kind == Kind::Var) out.push_back(name);
  for (const auto& a : args) a.collect_vars(out);
}

Formula Formula::atom(std::string rel, std::vector<Term> ts) {
  Formula f;
  f.kind = Kind::Atom;
  f.name = std::move(rel);
  f.terms = std::move(ts);
  return f;
}

Formula Formula::eq(Term lhs, Term rhs) {
  Formula f;
  f.kind = Kind::Eq;
  f.terms = {std::move(lhs), std::move(rhs)};
  return f;
}

Formula Formula::neg(Formula g) {
  Formula f;
  f.kind = Kind::Not;
  f.sub = {std::move(g)};
  return f;
}

Formula Formula::binary(Kind k, Formula l, Formula r) {
  Formula f;
  f.kind = k;
  f.sub = {std::move(l), std::move(r)};
  return f;
}

Formula Formula::quant(Kind k, std::string var, std::string sort, Formula body) {
  Formula f;
  f.kind = k;
  f.name = std::move(var);
  f.var_sort = std::move(sort);
  f.sub = {std::move(body)};
  return f;
}

int Formula::node_count() const {
  int n = 1;
  for (const auto& t : terms) n += t.node_count();
  for (const auto& s : sub) n += s.node_count();
  return n;
}

int Formula::quantifier_depth() const {
  int d = 0;
  for (const auto& s : sub) d = std::max(d, s.quantifier_depth());
  return d + (is_quantifier() ? 1 : 0);
}

bool Formula::contains_equality() const {
  if (kind == Kind::Eq) return true;
  for (const auto& s : sub)
    if (s.contains_equality()) return true;
  return false;
}

namespace {

void free_vars_rec(const Formula& f, std::vector<std::string>& bound,
                   std::vector<std::string>& out) {
  for (const auto& t : f.terms) {
    std::vector<std::string> vs;
    t.collect_vars(vs);
    for (auto& v : vs) {
      if (std::find(bound.begin(), bound.end(), v) != bound.end()) continue;
      if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    }
  }
  if (f.is_quantifier()) {
    bound.push_back(f.name);
    free_vars_rec(f.sub[0], bound, out);
    bound.pop_back();
  } else {
    for (const auto& s : f.sub) free_vars_rec(s, bound, out);
  }
}

Term rename_term(const Term& t, const std::string& from, const std::string& to) {
  if (t.kind == Term::Kind::Var)
    return t.name == from ? Term::var(to) : t;
  if (t.kind == Term::Kind::Const) return t;
  std::vector<Term> as;
  as.reserve(t.args.size());
  for (const auto& a : t.args) as.push_back(rename_term(a, from, to));
  return Term::app(t.name, std::move(as));
}

}  // namespace

std::vector<std::string> Formula::free_vars() const {
  std::vector<std::string> bound, out;
  free_vars_rec(*this, bound, out);
  return out;
}

Formula Formula::rename_free(const std::string& from, const std::string& to) const {
  if (is_quantifier() && name == from) return *this;  // shadowed below
  Formula f = *this;
  for (auto& t : f.terms) t = rename_term(t, from, to);
  for (auto& s : f.sub) s = s.rename_free(from, to);
  return f;
}

namespace {

bool print_infix_comp(const Signature& sig) {
  auto it = sig.functions.find("comp");
  return it != sig.functions.end() && it->second.args.size() == 2;
}

void term_str(const Term& t, const Signature& sig, std::string& out) {
  switch (t.kind) {
    case Term::Kind::Var:
    case Term::Kind::Const:
      out += t.name;
      return;
    case Term::Kind::App:
      if (t.name == "comp" && t.args.size() == 2 && print_infix_comp(sig)) {
        out += '(';
        term_str(t.args[0], sig, out);
        out += " o ";
        term_str(t.args[1], sig, out);
        out += ')';
        return;
      }
      out += t.name;
      out += '(';
      for (size_t i = 0; i < t.args.size(); ++i) {
        if (i) out += ", ";
        term_str(t.args[i], sig, out);
      }
      out += ')';
  }
}

// Precedence: ~ > & > | > -> > <->; quantifier bodies reach maximally right,
// so quantified subformulas are parenthesized in operand position.
int level(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Iff: return 1;
    case Formula::Kind::Implies: return 2;
    case Formula::Kind::Or: return 3;
    case Formula::Kind::And: return 4;
    case Formula::Kind::Not: return 5;
    default: return 6;
  }
}

void formula_str(const Formula& f, const Signature& sig, int parent_level, std::string& out) {
  switch (f.kind) {
    case Formula::Kind::Atom:
      out += f.name;
      if (!f.terms.empty()) {
        out += '(';
        for (size_t i = 0; i < f.terms.size(); ++i) {
          if (i) out += ", ";
          term_str(f.terms[i], sig, out);
        }
        out += ')';
      }
      return;
    case Formula::Kind::Eq:
      term_str(f.terms[0], sig, out);
      out += " = ";
      term_str(f.terms[1], sig, out);
      return;
    case Formula::Kind::Not:
      out += '~';
      formula_str(f.sub[0], sig, level(Formula::Kind::Not), out);
      return;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      bool parens = parent_level > 0;
      if (parens) out += '(';
      out += (f.kind == Formula::Kind::Forall) ? "forall " : "exists ";
      out += f.name;
      out += ':';
      out += f.var_sort;
      out += ". ";
      formula_str(f.sub[0], sig, 0, out);
      if (parens) out += ')';
      return;
    }
    default: {
      int lv = level(f.kind);
      bool parens = parent_level >= lv;
      const char* op = f.kind == Formula::Kind::And   ? " & "
                       : f.kind == Formula::Kind::Or  ? " | "
                       : f.kind == Formula::Kind::Iff ? " <-> "
                                                      : " -> ";
      if (parens) out += '(';
      formula_str(f.sub[0], sig, lv, out);
      out += op;
      formula_str(f.sub[1], sig, lv, out);
      if (parens) out += ')';
    }
  }
}

}  // namespace

std::string print_term(const Term& t, const Signature& sig) {
  std::string out;
  term_str(t, sig, out);
  return out;
}

std::string print_formula(const Formula& f, const Signature& sig) {
  std::string out;
  formula_str(f, sig, 0, out);
  return out;
}

}  // namespace catmod
