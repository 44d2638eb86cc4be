#include "catmod/structure.hpp"

#include <algorithm>
#include <functional>

#include "catmod/errors.hpp"

namespace catmod {

namespace {
const std::vector<int> kEmpty;

std::string tuple_str(const std::vector<int>& t) {
  std::string s = "(";
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t[i]);
  }
  return s + ")";
}

// All tuples over the given per-position carriers, lexicographic.
void for_each_tuple(const std::vector<const std::vector<int>*>& doms,
                    const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> t(doms.size());
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == doms.size()) {
      fn(t);
      return;
    }
    for (int e : *doms[i]) {
      t[i] = e;
      rec(i + 1);
    }
  };
  rec(0);
}
}  // namespace

const std::vector<int>& FinStructure::carrier(const std::string& sort) const {
  auto it = carriers.find(sort);
  return it == carriers.end() ? kEmpty : it->second;
}

bool FinStructure::has_element(const std::string& sort, int e) const {
  const auto& c = carrier(sort);
  return std::find(c.begin(), c.end(), e) != c.end();
}

size_t FinStructure::total_size() const {
  size_t n = 0;
  for (const auto& [s, c] : carriers) n += c.size();
  return n;
}

std::optional<int> FinStructure::apply(const std::string& fn, const std::vector<int>& args) const {
  auto f = funcs.find(fn);
  if (f == funcs.end()) return std::nullopt;
  auto v = f->second.find(args);
  if (v == f->second.end()) return std::nullopt;
  return v->second;
}

bool FinStructure::holds(const std::string& rel, const std::vector<int>& args) const {
  auto r = rels.find(rel);
  return r != rels.end() && r->second.count(args) > 0;
}

std::vector<std::string> validate_structure(const FinStructure& m) {
  std::vector<std::string> out = m.sig.validate();
  for (const auto& s : m.sig.sorts)
    if (!m.carriers.count(s)) out.push_back("missing carrier for sort " + s);
  for (const auto& [s, c] : m.carriers) {
    if (!m.sig.has_sort(s)) out.push_back("carrier for undeclared sort " + s);
    std::set<int> seen(c.begin(), c.end());
    if (seen.size() != c.size()) out.push_back("carrier of sort " + s + " has duplicate ids");
  }
  for (const auto& [n, s] : m.sig.constants) {
    auto it = m.consts.find(n);
    if (it == m.consts.end()) {
      out.push_back("constant " + n + " not interpreted");
    } else if (!m.has_element(s, it->second)) {
      out.push_back("constant " + n + " interpreted outside its carrier");
    }
  }
  for (const auto& [n, prof] : m.sig.functions) {
    auto it = m.funcs.find(n);
    const std::map<std::vector<int>, int> empty_map;
    const auto& table = it == m.funcs.end() ? empty_map : it->second;
    std::vector<const std::vector<int>*> doms;
    for (const auto& a : prof.args) doms.push_back(&m.carrier(a));
    size_t domain_size = 1;
    for (auto* d : doms) domain_size *= d->size();
    if (!prof.partial && table.size() != domain_size)
      out.push_back("total function " + n + " is not defined on all tuples");
    for (const auto& [args, val] : table) {
      if (args.size() != prof.args.size()) {
        out.push_back("function " + n + " has entry of wrong arity " + tuple_str(args));
        continue;
      }
      for (size_t i = 0; i < args.size(); ++i)
        if (!m.has_element(prof.args[i], args[i]))
          out.push_back("function " + n + " entry " + tuple_str(args) + " has argument outside carrier");
      if (!m.has_element(prof.result, val))
        out.push_back("function " + n + " value at " + tuple_str(args) + " outside carrier");
    }
  }
  for (const auto& [n, table] : m.funcs)
    if (!m.sig.functions.count(n)) out.push_back("interpretation for undeclared function " + n);
  for (const auto& [n, tuples] : m.rels) {
    auto it = m.sig.relations.find(n);
    if (it == m.sig.relations.end()) {
      out.push_back("interpretation for undeclared relation " + n);
      continue;
    }
    for (const auto& t : tuples) {
      if (t.size() != it->second.size()) {
        out.push_back("relation " + n + " has tuple of wrong arity " + tuple_str(t));
        continue;
      }
      for (size_t i = 0; i < t.size(); ++i)
        if (!m.has_element(it->second[i], t[i]))
          out.push_back("relation " + n + " tuple " + tuple_str(t) + " outside carrier");
    }
  }
  return out;
}

std::vector<std::string> validate_homomorphism(const Homomorphism& h) {
  std::vector<std::string> out;
  const FinStructure& a = *h.source;
  const FinStructure& b = *h.target;
  if (a.sig != b.sig) return {"source and target signatures differ"};
  for (const auto& [s, c] : a.carriers) {
    auto mit = h.maps.find(s);
    for (int e : c) {
      if (mit == h.maps.end() || !mit->second.count(e)) {
        out.push_back("element " + std::to_string(e) + " of sort " + s + " unmapped");
        continue;
      }
      if (!b.has_element(s, mit->second.at(e)))
        out.push_back("image of element " + std::to_string(e) + " of sort " + s + " outside target carrier");
    }
  }
  if (!out.empty()) return out;
  auto img = [&](const std::string& sort, int e) { return h.maps.at(sort).at(e); };
  for (const auto& [n, v] : a.consts) {
    const auto& sort = a.sig.constants.at(n);
    if (img(sort, v) != b.consts.at(n)) out.push_back("constant " + n + " not preserved");
  }
  for (const auto& [n, table] : a.funcs) {
    const auto& prof = a.sig.functions.at(n);
    for (const auto& [args, val] : table) {
      std::vector<int> im(args.size());
      for (size_t i = 0; i < args.size(); ++i) im[i] = img(prof.args[i], args[i]);
      auto bv = b.apply(n, im);
      if (!bv)
        out.push_back("function " + n + " undefined on image of " + tuple_str(args));
      else if (*bv != img(prof.result, val))
        out.push_back("function " + n + " not preserved at " + tuple_str(args));
    }
  }
  for (const auto& [n, profile] : a.sig.relations) {
    std::vector<const std::vector<int>*> doms;
    for (const auto& s : profile) doms.push_back(&a.carrier(s));
    for_each_tuple(doms, [&](const std::vector<int>& t) {
      std::vector<int> im(t.size());
      for (size_t i = 0; i < t.size(); ++i) im[i] = img(profile[i], t[i]);
      bool in_a = a.holds(n, t);
      bool in_b = b.holds(n, im);
      if (in_a && !in_b)
        out.push_back("relation " + n + " not preserved at " + tuple_str(t));
      if (h.strong && !in_a && in_b)
        out.push_back("relation " + n + " not reflected at " + tuple_str(t));
    });
  }
  return out;
}

Homomorphism identity_hom(const StructPtr& m) {
  Homomorphism h;
  h.source = h.target = m;
  h.strong = true;
  for (const auto& [s, c] : m->carriers)
    for (int e : c) h.maps[s][e] = e;
  return h;
}

Homomorphism compose(const Homomorphism& g, const Homomorphism& f) {
  if (*f.target != *g.source) fail("SignatureMismatch", "composition of non-composable homomorphisms");
  Homomorphism h;
  h.source = f.source;
  h.target = g.target;
  h.strong = f.strong && g.strong;
  for (const auto& [s, m] : f.maps)
    for (const auto& [e, v] : m) h.maps[s][e] = g.maps.at(s).at(v);
  return h;
}

bool injective(const Homomorphism& h) {
  for (const auto& [s, m] : h.maps) {
    std::set<int> seen;
    for (const auto& [e, v] : m)
      if (!seen.insert(v).second) return false;
  }
  return true;
}

bool surjective(const Homomorphism& h) {
  for (const auto& [s, c] : h.target->carriers) {
    std::set<int> hit;
    auto it = h.maps.find(s);
    if (it != h.maps.end())
      for (const auto& [e, v] : it->second) hit.insert(v);
    for (int e : c)
      if (!hit.count(e)) return false;
  }
  return true;
}

Theory abelian_theory() {
  Theory t;
  t.sig = group_signature();
  auto x = Term::var("x"), y = Term::var("y"), z = Term::var("z");
  auto zero = Term::constant("zero");
  auto add = [](Term a, Term b) { return Term::app("add", {std::move(a), std::move(b)}); };
  auto neg = [](Term a) { return Term::app("neg", {std::move(a)}); };
  t.sentences.push_back(Formula::forall(
      "x", "g",
      Formula::forall("y", "g",
                      Formula::forall("z", "g", Formula::eq(add(add(x, y), z), add(x, add(y, z)))))));
  t.sentences.push_back(
      Formula::forall("x", "g", Formula::forall("y", "g", Formula::eq(add(x, y), add(y, x)))));
  t.sentences.push_back(Formula::forall("x", "g", Formula::eq(add(x, zero), x)));
  t.sentences.push_back(Formula::forall("x", "g", Formula::eq(add(x, neg(x)), zero)));
  return t;
}

Theory set_n_theory(int n, const std::string& sort) {
  Theory t;
  t.sig.sorts = {sort};
  // exists x0..x{n-1}: pairwise distinct, and forall y: y is one of them.
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  Formula body = Formula::eq(Term::var("y"), Term::var(names[0]));
  for (int i = 1; i < n; ++i)
    body = Formula::disj(std::move(body), Formula::eq(Term::var("y"), Term::var(names[i])));
  Formula f = Formula::forall("y", sort, std::move(body));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      f = Formula::conj(Formula::neg(Formula::eq(Term::var(names[i]), Term::var(names[j]))),
                        std::move(f));
  for (int i = n - 1; i >= 0; --i) f = Formula::exists(names[i], sort, std::move(f));
  t.sentences.push_back(std::move(f));
  return t;
}

FinStructure cyclic_group(int n) {
  FinStructure m;
  m.sig = group_signature();
  for (int i = 0; i < n; ++i) m.carriers["g"].push_back(i);
  m.consts["zero"] = 0;
  for (int i = 0; i < n; ++i) {
    m.funcs["neg"][{i}] = (n - i) % n;
    for (int j = 0; j < n; ++j) m.funcs["add"][{i, j}] = (i + j) % n;
  }
  return m;
}

FinStructure direct_product(const FinStructure& a, const FinStructure& b) {
  if (a.sig != b.sig) fail("SignatureMismatch", "direct product of different signatures");
  FinStructure m;
  m.sig = a.sig;
  // Pair (i, j) is encoded as i * |B| + j per sort.
  std::map<std::string, size_t> bw;
  for (const auto& s : a.sig.sorts) {
    bw[s] = b.carrier(s).size();
    for (size_t i = 0; i < a.carrier(s).size(); ++i)
      for (size_t j = 0; j < bw[s]; ++j) m.carriers[s].push_back(static_cast<int>(i * bw[s] + j));
  }
  auto index_of = [](const std::vector<int>& c, int e) {
    return static_cast<int>(std::find(c.begin(), c.end(), e) - c.begin());
  };
  auto enc = [&](const std::string& s, int ea, int eb) {
    return static_cast<int>(index_of(a.carrier(s), ea) * bw[s] + index_of(b.carrier(s), eb));
  };
  for (const auto& [n, s] : a.sig.constants) m.consts[n] = enc(s, a.consts.at(n), b.consts.at(n));
  for (const auto& [n, prof] : a.sig.functions) {
    std::vector<const std::vector<int>*> domsA, domsB;
    for (const auto& s : prof.args) {
      domsA.push_back(&a.carrier(s));
      domsB.push_back(&b.carrier(s));
    }
    for_each_tuple(domsA, [&](const std::vector<int>& ta) {
      for_each_tuple(domsB, [&](const std::vector<int>& tb) {
        auto va = a.apply(n, ta);
        auto vb = b.apply(n, tb);
        if (!va || !vb) return;
        std::vector<int> args(ta.size());
        for (size_t i = 0; i < ta.size(); ++i) args[i] = enc(prof.args[i], ta[i], tb[i]);
        m.funcs[n][args] = enc(prof.result, *va, *vb);
      });
    });
  }
  for (const auto& [n, profile] : a.sig.relations) {
    auto ra = a.rels.find(n);
    auto rb = b.rels.find(n);
    if (ra == a.rels.end() || rb == b.rels.end()) continue;
    for (const auto& ta : ra->second)
      for (const auto& tb : rb->second) {
        std::vector<int> args(ta.size());
        for (size_t i = 0; i < ta.size(); ++i) args[i] = enc(profile[i], ta[i], tb[i]);
        m.rels[n].insert(args);
      }
  }
  return m;
}

FinStructure unary_pred_structure(int n, int p_count) {
  FinStructure m;
  m.sig.sorts = {"s"};
  m.sig.relations["P"] = {"s"};
  for (int i = 0; i < n; ++i) m.carriers["s"].push_back(i);
  m.rels["P"] = {};
  for (int i = 0; i < p_count; ++i) m.rels["P"].insert({i});
  return m;
}

FinStructure set_reduct(const FinStructure& m, const std::string& keep_sort) {
  FinStructure r;
  if (keep_sort.empty()) {
    r.sig.sorts = m.sig.sorts;
    r.carriers = m.carriers;
  } else {
    r.sig.sorts = {keep_sort};
    r.carriers[keep_sort] = m.carrier(keep_sort);
  }
  return r;
}

}  // namespace catmod
