#pragma once

#include <map>
#include <string>

#include "catmod/formula.hpp"
#include "catmod/signature.hpp"

namespace catmod {

struct ParseOptions {
  bool allow_equality = true;  // false under the homotopic flag
  // Sorts for free variables; variables not listed get their sort inferred
  // from the first typed position they occupy.
  std::map<std::string, std::string> free_var_sorts;
};

// Errors: SyntaxError (position + expected), SortError (names the offender),
// EqualityForbidden.
Formula parse_formula(const std::string& text, const Signature& sig,
                      const ParseOptions& opts = {});

}  // namespace catmod
