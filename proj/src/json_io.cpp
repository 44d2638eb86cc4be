#include "catmod/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "catmod/errors.hpp"
#include "catmod/parser.hpp"

namespace catmod {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail("SyntaxError", "malformed JSON");
  return j;
}

json signature_json(const Signature& s) {
  json j;
  j["sorts"] = s.sorts;
  j["constants"] = json::object();
  for (const auto& [n, v] : s.constants) j["constants"][n] = v;
  j["functions"] = json::object();
  for (const auto& [n, p] : s.functions)
    j["functions"][n] = {{"args", p.args}, {"result", p.result}, {"partial", p.partial}};
  j["relations"] = json::object();
  for (const auto& [n, v] : s.relations) j["relations"][n] = v;
  return j;
}

Signature signature_of(const json& j) {
  Signature s;
  s.sorts = j.at("sorts").get<std::vector<std::string>>();
  if (j.contains("constants"))
    for (const auto& [n, v] : j.at("constants").items()) s.constants[n] = v.get<std::string>();
  if (j.contains("functions"))
    for (const auto& [n, v] : j.at("functions").items()) {
      FunctionProfile p;
      p.args = v.at("args").get<std::vector<std::string>>();
      p.result = v.at("result").get<std::string>();
      p.partial = v.value("partial", false);
      s.functions[n] = std::move(p);
    }
  if (j.contains("relations"))
    for (const auto& [n, v] : j.at("relations").items())
      s.relations[n] = v.get<std::vector<std::string>>();
  auto errs = s.validate();
  if (!errs.empty()) fail("SortError", "invalid signature: " + errs.front());
  return s;
}

json structure_json(const FinStructure& m) {
  json j;
  j["sig"] = signature_json(m.sig);
  j["carriers"] = json::object();
  for (const auto& [s, c] : m.carriers) j["carriers"][s] = c;
  j["consts"] = json::object();
  for (const auto& [n, v] : m.consts) j["consts"][n] = v;
  j["funcs"] = json::object();
  for (const auto& [n, table] : m.funcs) {
    json rows = json::array();
    for (const auto& [args, val] : table) {
      json row = args;
      row.push_back(val);
      rows.push_back(std::move(row));
    }
    j["funcs"][n] = {{"map", std::move(rows)}};
  }
  j["rels"] = json::object();
  for (const auto& [n, tuples] : m.rels) {
    json rows = json::array();
    for (const auto& t : tuples) rows.push_back(t);
    j["rels"][n] = std::move(rows);
  }
  return j;
}

FinStructure structure_of(const json& j) {
  FinStructure m;
  m.sig = signature_of(j.at("sig"));
  for (const auto& [s, c] : j.at("carriers").items())
    m.carriers[s] = c.get<std::vector<int>>();
  if (j.contains("consts"))
    for (const auto& [n, v] : j.at("consts").items()) m.consts[n] = v.get<int>();
  if (j.contains("funcs"))
    for (const auto& [n, v] : j.at("funcs").items()) {
      m.funcs[n];
      for (const auto& row : v.at("map")) {
        std::vector<int> r = row.get<std::vector<int>>();
        if (r.empty()) fail("SyntaxError", "empty function table row");
        int val = r.back();
        r.pop_back();
        m.funcs[n][r] = val;
      }
    }
  if (j.contains("rels"))
    for (const auto& [n, v] : j.at("rels").items()) {
      m.rels[n];
      for (const auto& row : v) m.rels[n].insert(row.get<std::vector<int>>());
    }
  return m;
}

json category_json(const FinCategory& c) {
  json j;
  j["objects"] = c.objects;
  j["morphisms"] = json::array();
  for (const auto& m : c.morphisms)
    j["morphisms"].push_back({{"id", m.id}, {"dom", m.dom}, {"cod", m.cod}});
  j["comp"] = json::array();
  for (const auto& [gf, h] : c.comp) j["comp"].push_back({gf.first, gf.second, h});
  j["ids"] = json::object();
  for (const auto& [o, i] : c.ids) j["ids"][std::to_string(o)] = i;
  return j;
}

FinCategory category_of(const json& j) {
  FinCategory c;
  c.objects = j.at("objects").get<std::vector<int>>();
  for (const auto& m : j.at("morphisms"))
    c.morphisms.push_back({m.at("id").get<int>(), m.at("dom").get<int>(), m.at("cod").get<int>()});
  if (j.contains("comp"))
    for (const auto& row : j.at("comp")) {
      auto r = row.get<std::vector<int>>();
      if (r.size() != 3) fail("SyntaxError", "composition rows are [g, f, h]");
      c.comp[{r[0], r[1]}] = r[2];
    }
  if (j.contains("ids"))
    for (const auto& [o, i] : j.at("ids").items()) c.ids[std::stoi(o)] = i.get<int>();
  return c;
}

}  // namespace

std::string signature_to_json(const Signature& s) { return signature_json(s).dump(2); }
Signature signature_from_json(const std::string& text) { return signature_of(parse_json(text)); }

std::string structure_to_json(const FinStructure& m) { return structure_json(m).dump(2); }
FinStructure structure_from_json(const std::string& text) {
  return structure_of(parse_json(text));
}

std::string theory_to_json(const Theory& t) {
  json j;
  j["sig"] = signature_json(t.sig);
  j["sentences"] = json::array();
  for (const auto& s : t.sentences) j["sentences"].push_back(print_formula(s, t.sig));
  return j.dump(2);
}

Theory theory_from_json(const std::string& text) {
  json j = parse_json(text);
  Theory t;
  t.sig = signature_of(j.at("sig"));
  if (j.contains("sentences"))
    for (const auto& s : j.at("sentences"))
      t.sentences.push_back(parse_formula(s.get<std::string>(), t.sig));
  return t;
}

std::string category_to_json(const FinCategory& c) { return category_json(c).dump(2); }
FinCategory category_from_json(const std::string& text) { return category_of(parse_json(text)); }

std::string filter_to_json(const FilterOnX& f) {
  json j;
  j["X"] = f.x;
  j["members"] = json::array();
  for (const auto& s : f.members) j["members"].push_back(std::vector<int>(s.begin(), s.end()));
  j["ultra"] = f.ultra;
  return j.dump(2);
}

FilterOnX filter_from_json(const std::string& text) {
  json j = parse_json(text);
  FilterOnX f;
  f.x = j.at("X").get<std::vector<int>>();
  for (const auto& row : j.at("members")) {
    auto v = row.get<std::vector<int>>();
    f.members.insert(std::set<int>(v.begin(), v.end()));
  }
  f.ultra = j.value("ultra", false);
  return f;
}

std::string homomorphism_to_json(const Homomorphism& h) {
  json j;
  j["strong"] = h.strong;
  j["maps"] = json::object();
  for (const auto& [s, m] : h.maps) {
    json mm = json::object();
    for (const auto& [e, v] : m) mm[std::to_string(e)] = v;
    j["maps"][s] = std::move(mm);
  }
  return j.dump(2);
}

std::string full_homomorphism_to_json(const Homomorphism& h) {
  json j = parse_json(homomorphism_to_json(h));
  j["source"] = structure_json(*h.source);
  j["target"] = structure_json(*h.target);
  return j.dump(2);
}

Homomorphism homomorphism_from_json(const std::string& text) {
  json j = parse_json(text);
  Homomorphism h;
  h.source = share(structure_of(j.at("source")));
  h.target = share(structure_of(j.at("target")));
  h.strong = j.value("strong", false);
  for (const auto& [s, m] : j.at("maps").items()) {
    h.maps[s];
    for (const auto& [e, v] : m.items()) h.maps[s][std::stoi(e)] = v.get<int>();
  }
  auto errs = validate_homomorphism(h);
  if (!errs.empty()) fail("SyntaxError", "invalid homomorphism: " + errs.front());
  return h;
}

Diagram diagram_from_json(const std::string& text, const CatPtr& host) {
  json j = parse_json(text);
  Diagram d;
  d.shape = share(category_of(j.at("shape")));
  d.j.source = d.shape;
  d.j.target = host;
  for (const auto& [o, v] : j.at("objects").items()) d.j.omap[std::stoi(o)] = v.get<int>();
  for (const auto& [m, v] : j.at("morphisms").items()) d.j.mmap[std::stoi(m)] = v.get<int>();
  auto errs = validate_diagram(d);
  if (!errs.empty()) fail("SyntaxError", "invalid diagram: " + errs.front());
  return d;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("IOError", "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) fail("IOError", "cannot write " + path);
  out << content;
}

// ---- bundles ----------------------------------------------------------------

void write_bundle(const ModelCategory& mc, const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(fs::path(dir) / "models");

  json cat = parse_json(category_to_json(*mc.cat));
  // morphism records carry the element maps so homs survive the round trip
  for (auto& m : cat.at("morphisms")) {
    const Homomorphism& h = mc.homs.at(m.at("id").get<int>());
    json maps = json::object();
    for (const auto& [s, mm] : h.maps) {
      json entry = json::object();
      for (const auto& [e, v] : mm) entry[std::to_string(e)] = v;
      maps[s] = std::move(entry);
    }
    m["map"] = std::move(maps);
  }
  write_file((fs::path(dir) / "category.json").string(), cat.dump(2));

  for (size_t i = 0; i < mc.models.size(); ++i)
    write_file((fs::path(dir) / "models" / ("M" + std::to_string(i) + ".json")).string(),
               structure_to_json(mc.models[i]));

  json meta;
  meta["theory"] = parse_json(theory_to_json(mc.theory));
  meta["theory_hash"] =
      std::to_string(std::hash<std::string>{}(theory_to_json(mc.theory)));
  meta["max_size"] = mc.max_size;
  meta["strong"] = mc.strong;
  meta["objects"] = mc.models.size();
  json index = json::object();
  for (size_t i = 0; i < mc.models.size(); ++i)
    index[std::to_string(i)] = "models/M" + std::to_string(i) + ".json";
  meta["model_files"] = std::move(index);
  write_file((fs::path(dir) / "meta.json").string(), meta.dump(2));
}

ModelCategory read_bundle(const std::string& dir) {
  namespace fs = std::filesystem;
  ModelCategory mc;
  json meta = parse_json(read_file((fs::path(dir) / "meta.json").string()));
  mc.theory = theory_from_json(meta.at("theory").dump());
  mc.max_size = meta.at("max_size").get<int>();
  mc.strong = meta.at("strong").get<bool>();

  json cat = parse_json(read_file((fs::path(dir) / "category.json").string()));
  FinCategory c = category_of(cat);

  size_t n = meta.at("objects").get<size_t>();
  for (size_t i = 0; i < n; ++i)
    mc.models.push_back(structure_from_json(
        read_file((fs::path(dir) / "models" / ("M" + std::to_string(i) + ".json")).string())));

  std::vector<StructPtr> ptrs;
  for (const auto& m : mc.models) ptrs.push_back(share(m));
  for (const auto& m : cat.at("morphisms")) {
    Homomorphism h;
    int dom = m.at("dom").get<int>();
    int cod = m.at("cod").get<int>();
    h.source = ptrs.at(dom);
    h.target = ptrs.at(cod);
    h.strong = mc.strong;
    for (const auto& [s, entry] : m.at("map").items()) {
      h.maps[s];
      for (const auto& [e, v] : entry.items()) h.maps[s][std::stoi(e)] = v.get<int>();
    }
    mc.homs.push_back(std::move(h));
  }
  mc.cat = share(std::move(c));
  return mc;
}

}  // namespace catmod
