#pragma once

#include <string>
#include <vector>

#include "catmod/signature.hpp"

namespace catmod {

struct Term {
  enum class Kind { Var, Const, App };

  Kind kind = Kind::Var;
  std::string name;
  std::vector<Term> args;  // App only

  bool operator==(const Term&) const = default;

  static Term var(std::string n) { return {Kind::Var, std::move(n), {}}; }
  static Term constant(std::string n) { return {Kind::Const, std::move(n), {}}; }
  static Term app(std::string f, std::vector<Term> as) {
    return {Kind::App, std::move(f), std::move(as)};
  }

  int node_count() const;
  void collect_vars(std::vector<std::string>& out) const;
};

// Immutable formula tree. Quantifier bodies use explicit sort ascriptions;
// size is the full AST node count (formula and term nodes).
struct Formula {
  enum class Kind { Atom, Eq, Not, And, Or, Implies, Iff, Forall, Exists };

  Kind kind = Kind::Atom;
  std::string name;        // Atom: relation name; quantifiers: bound variable
  std::string var_sort;    // quantifiers only
  std::vector<Term> terms; // Atom arguments; Eq: exactly {lhs, rhs}
  std::vector<Formula> sub;

  bool operator==(const Formula&) const = default;

  static Formula atom(std::string rel, std::vector<Term> ts);
  static Formula eq(Term lhs, Term rhs);
  static Formula neg(Formula f);
  static Formula binary(Kind k, Formula l, Formula r);
  static Formula conj(Formula l, Formula r) { return binary(Kind::And, std::move(l), std::move(r)); }
  static Formula disj(Formula l, Formula r) { return binary(Kind::Or, std::move(l), std::move(r)); }
  static Formula implies(Formula l, Formula r) { return binary(Kind::Implies, std::move(l), std::move(r)); }
  static Formula iff(Formula l, Formula r) { return binary(Kind::Iff, std::move(l), std::move(r)); }
  static Formula quant(Kind k, std::string var, std::string sort, Formula body);
  static Formula forall(std::string var, std::string sort, Formula body) {
    return quant(Kind::Forall, std::move(var), std::move(sort), std::move(body));
  }
  static Formula exists(std::string var, std::string sort, Formula body) {
    return quant(Kind::Exists, std::move(var), std::move(sort), std::move(body));
  }

  bool is_quantifier() const { return kind == Kind::Forall || kind == Kind::Exists; }
  bool is_binary() const {
    return kind == Kind::And || kind == Kind::Or || kind == Kind::Implies || kind == Kind::Iff;
  }

  int node_count() const;
  int quantifier_depth() const;
  bool contains_equality() const;

  // Free variables in first-occurrence order, deduplicated.
  std::vector<std::string> free_vars() const;

  // Capture-naive substitution of a free variable by a variable term.
  Formula rename_free(const std::string& from, const std::string& to) const;
};

// Canonical printing; reparsing the result over the same signature yields a
// structurally identical formula. When the signature has a binary "comp",
// composition prints infix: (g o f).
std::string print_term(const Term& t, const Signature& sig);
std::string print_formula(const Formula& f, const Signature& sig);

}  // namespace catmod
