#pragma once

#include <map>
#include <optional>
#include <string>

#include "catmod/formula.hpp"
#include "catmod/structure.hpp"

namespace catmod {

using Env = std::map<std::string, int>;

// Partial-term evaluation; nullopt when any needed application is undefined.
std::optional<int> eval_term(const FinStructure& m, const Term& t, const Env& env);

// Tarskian truth with negative free logic: an atomic formula (including
// equality) containing an undefined term is false; connectives and
// quantifiers are classical on top.
// Errors: SignatureMismatch, UnboundVariable.
bool eval_formula(const FinStructure& m, const Formula& f, const Env& env = {});

bool satisfies(const FinStructure& m, const Theory& t);

}  // namespace catmod
