#pragma once

#include <map>
#include <string>
#include <vector>

namespace catmod {

struct FunctionProfile {
  std::vector<std::string> args;
  std::string result;
  bool partial = false;

  bool operator==(const FunctionProfile&) const = default;
};

// Multi-sorted first-order signature. Symbol names are unique across the
// constant/function/relation kinds; sort names live in their own namespace.
struct Signature {
  std::vector<std::string> sorts;
  std::map<std::string, std::string> constants;        // name -> sort
  std::map<std::string, FunctionProfile> functions;    // name -> profile
  std::map<std::string, std::vector<std::string>> relations;  // name -> arg sorts

  bool operator==(const Signature&) const = default;

  bool has_sort(const std::string& s) const;
  bool has_symbol(const std::string& name) const;
  bool single_sorted() const { return sorts.size() == 1; }

  // Declared-sort and name-uniqueness violations; empty iff well-formed.
  std::vector<std::string> validate() const;

  // Restriction to constants and function symbols (all relations dropped).
  Signature fct() const;
};

// The two-sorted language of categories: sorts o, m; comp (partial), dom,
// rng, Id. comp(g, f) is g after f and may be written infix as "g o f".
Signature lcat_signature();

// One-sorted equality-free language with the single ternary predicate QC.
Signature lhomo_signature();

// Abelian-group language: sort g, functions add/neg, constant zero.
Signature group_signature();

}  // namespace catmod
