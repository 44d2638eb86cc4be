#pragma once

#include <string>

#include "catmod/category.hpp"
#include "catmod/modcat.hpp"
#include "catmod/structure.hpp"
#include "catmod/ultra.hpp"

namespace catmod {

// JSON wire formats (keys and shapes are part of the CLI contract):
//   Signature:   {"sorts":[...],"constants":{n:s},"functions":{n:{"args":[..],
//                "result":s,"partial":b}},"relations":{n:[..]}}
//   Structure:   {"sig":...,"carriers":{s:[ids]},"consts":{...},
//                "funcs":{n:{"map":[[args...,val],...]}},"rels":{n:[[...],...]}}
//   Theory:      {"sig":...,"sentences":["..."]}
//   Category:    {"objects":[...],"morphisms":[{"id":..,"dom":..,"cod":..}],
//                "comp":[[g,f,h],...],"ids":{obj:morph}}
//   Diagram:     {"shape":<category>,"objects":{shapeObj:obj},
//                "morphisms":{shapeMorph:morph}}
//   Filter:      {"X":[...],"members":[[...],...],"ultra":b}

std::string signature_to_json(const Signature& s);
Signature signature_from_json(const std::string& text);

std::string structure_to_json(const FinStructure& m);
FinStructure structure_from_json(const std::string& text);

std::string theory_to_json(const Theory& t);
Theory theory_from_json(const std::string& text);

std::string category_to_json(const FinCategory& c);
FinCategory category_from_json(const std::string& text);

std::string filter_to_json(const FilterOnX& f);
FilterOnX filter_from_json(const std::string& text);

std::string homomorphism_to_json(const Homomorphism& h);
// Full form with embedded source/target structures.
std::string full_homomorphism_to_json(const Homomorphism& h);
Homomorphism homomorphism_from_json(const std::string& text);

Diagram diagram_from_json(const std::string& text, const CatPtr& host);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace catmod
