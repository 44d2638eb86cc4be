#include "catmod/homotopic.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "catmod/enumerate.hpp"
#include "catmod/errors.hpp"
#include "catmod/skeleton.hpp"

namespace catmod {

std::vector<std::string> validate_isograph(const IsoGraph& g) {
  std::vector<std::string> out;
  const FinCategory& c = *g.host;
  auto classes = object_iso_classes(c);
  std::map<int, int> cls;
  for (size_t i = 0; i < classes.size(); ++i)
    for (int o : classes[i]) cls[o] = static_cast<int>(i);

  for (const auto& [pair, m] : g.chosen) {
    const auto* rec = c.morphism(m);
    if (!rec || rec->dom != pair.first || rec->cod != pair.second) {
      out.push_back("chosen arrow has wrong endpoints");
      continue;
    }
    if (!is_isomorphism(c, m)) out.push_back("chosen arrow is not an isomorphism");
  }
  for (int o : c.objects) {
    auto it = g.chosen.find({o, o});
    if (it == g.chosen.end())
      out.push_back("missing identity arrow at object " + std::to_string(o));
    else if (it->second != c.ids.at(o))
      out.push_back("a proper automorphism at object " + std::to_string(o));
  }
  for (int a : c.objects)
    for (int b : c.objects) {
      bool iso = cls.at(a) == cls.at(b);
      bool present = g.chosen.count({a, b}) > 0;
      if (iso && !present)
        out.push_back("no arrow between isomorphic objects " + std::to_string(a) + " and " +
                      std::to_string(b));
      if (!iso && present)
        out.push_back("arrow between non-isomorphic objects " + std::to_string(a) + " and " +
                      std::to_string(b));
    }
  for (const auto& [ab, f] : g.chosen)
    for (const auto& [bc, h] : g.chosen) {
      if (ab.second != bc.first) continue;
      auto comp = c.compose(h, f);
      auto it = g.chosen.find({ab.first, bc.second});
      if (!comp || it == g.chosen.end() || *comp != it->second)
        out.push_back("chosen arrows not closed under composition");
    }
  return out;
}

IsoGraph build_isograph(const CatPtr& c) {
  IsoGraph g;
  g.host = c;
  SkeletonResult sk = skeleton_of(c);
  for (int a : c->objects)
    for (int b : c->objects) {
      if (sk.rep.at(a) != sk.rep.at(b)) continue;
      int sa_inv = *inverse_morphism(*c, sk.sigma.at(a));
      g.chosen[{a, b}] = *c->compose(sk.sigma.at(b), sa_inv);
    }
  return g;
}

std::vector<IsoGraph> enumerate_isographs(const CatPtr& c, size_t cap) {
  auto classes = object_iso_classes(*c);
  // per class, the choices of sigma_A for A != rep
  std::vector<std::pair<int, std::vector<std::vector<int>>>> class_choices;
  size_t total = 1;
  for (const auto& cl : classes) {
    int rep = cl.front();
    std::vector<std::vector<int>> per_obj;
    for (int o : cl) {
      if (o == rep) continue;
      std::vector<int> isos;
      for (int m : c->hom(rep, o))
        if (is_isomorphism(*c, m)) isos.push_back(m);
      total *= isos.size();
      per_obj.push_back(std::move(isos));
    }
    if (total > cap) fail("BoundsExceeded", "more than " + std::to_string(cap) + " iso-graphs");
    class_choices.push_back({rep, std::move(per_obj)});
  }

  std::vector<IsoGraph> out;
  std::map<int, int> sigma;
  std::function<void(size_t, size_t)> rec = [&](size_t ci, size_t oi) {
    if (ci == classes.size()) {
      IsoGraph g;
      g.host = c;
      for (size_t k = 0; k < classes.size(); ++k)
        for (int a : classes[k])
          for (int b : classes[k]) {
            int sa_inv = *inverse_morphism(*c, sigma.at(a));
            g.chosen[{a, b}] = *c->compose(sigma.at(b), sa_inv);
          }
      out.push_back(std::move(g));
      return;
    }
    const auto& cl = classes[ci];
    int rep = cl.front();
    if (oi == 0) sigma[rep] = c->ids.at(rep);
    // advance over non-representative objects of this class
    std::vector<int> others;
    for (int o : cl)
      if (o != rep) others.push_back(o);
    if (oi == others.size()) {
      rec(ci + 1, 0);
      return;
    }
    for (int m : class_choices[ci].second[oi]) {
      sigma[others[oi]] = m;
      rec(ci, oi + 1);
    }
  };
  rec(0, 0);
  return out;
}

bool extends_to_isograph(const CatPtr& c, const std::vector<int>& seed, size_t max_seed) {
  if (seed.size() > max_seed)
    fail("BoundsExceeded", "seed larger than " + std::to_string(max_seed) + " morphisms");
  // cheap necessary checks first: isos, thinness, no proper automorphism
  // from any word over the seed
  std::map<std::pair<int, int>, int> pinned;
  for (int m : seed) {
    if (!c->morphism(m)) return false;
    if (!is_isomorphism(*c, m)) return false;
    int a = c->dom(m), b = c->cod(m);
    auto it = pinned.find({a, b});
    if (it != pinned.end() && it->second != m) return false;
    pinned[{a, b}] = m;
    if (a == b && m != c->ids.at(a)) return false;
  }
  // words over distinct seed morphisms must not compose to a proper
  // automorphism; with n seeds, checking all n! orderings is enough
  {
    std::vector<int> idx(seed.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end());
    do {
      // compose maximal composable runs in this order
      for (size_t start = 0; start < idx.size(); ++start) {
        int cur = seed[idx[start]];
        for (size_t k = start + 1; k < idx.size(); ++k) {
          auto next = c->compose(seed[idx[k]], cur);
          if (!next) break;
          cur = *next;
          if (c->dom(cur) == c->cod(cur) && cur != c->ids.at(c->dom(cur))) return false;
        }
      }
    } while (std::next_permutation(idx.begin(), idx.end()));
  }
  // completion search over sigma choices per iso class
  auto classes = object_iso_classes(*c);
  for (const auto& cl : classes) {
    int rep = cl.front();
    std::vector<int> objs(cl.begin(), cl.end());
    std::map<int, int> sigma;
    std::function<bool(size_t)> assign = [&](size_t i) -> bool {
      if (i == objs.size()) {
        for (int a : objs)
          for (int b : objs) {
            int sa_inv = *inverse_morphism(*c, sigma.at(a));
            int ch = *c->compose(sigma.at(b), sa_inv);
            auto it = pinned.find({a, b});
            if (it != pinned.end() && it->second != ch) return false;
          }
        return true;
      }
      int o = objs[i];
      if (o == rep) {
        sigma[o] = c->ids.at(o);
        return assign(i + 1);
      }
      for (int m : c->hom(rep, o)) {
        if (!is_isomorphism(*c, m)) continue;
        sigma[o] = m;
        if (assign(i + 1)) return true;
      }
      return false;
    };
    if (!assign(0)) return false;
  }
  return true;
}

bool qc_holds(const FinCategory& c, const IsoGraph& g, int f, int gm, int h) {
  int a = c.dom(f), b = c.cod(f);
  int cc = c.dom(gm), d = c.cod(gm);
  int p = c.dom(h), q = c.cod(h);
  auto alpha = g.chosen.find({p, a});
  auto beta = g.chosen.find({b, cc});
  auto gamma = g.chosen.find({q, d});
  if (alpha == g.chosen.end() || beta == g.chosen.end() || gamma == g.chosen.end()) return false;
  int lhs = *c.compose(f, alpha->second);
  lhs = *c.compose(beta->second, lhs);
  lhs = *c.compose(gm, lhs);
  int rhs = *c.compose(gamma->second, h);
  return lhs == rhs;
}

bool quasi_equal(const FinCategory& c, const IsoGraph& g, int p, int q) {
  auto v1 = g.chosen.find({c.dom(p), c.dom(q)});
  auto v2 = g.chosen.find({c.cod(p), c.cod(q)});
  if (v1 == g.chosen.end() || v2 == g.chosen.end()) return false;
  return *c.compose(v2->second, p) == *c.compose(q, v1->second);
}

bool is_quasi_morphism(const FinCategory& c, const IsoGraph& g, int p, int from, int to) {
  return g.chosen.count({c.dom(p), from}) > 0 && g.chosen.count({c.cod(p), to}) > 0;
}

FinStructure qc_structure(const FinCategory& c, const IsoGraph& g) {
  FinStructure s;
  s.sig = lhomo_signature();
  for (const auto& m : c.morphisms) s.carriers["m"].push_back(m.id);
  s.rels["QC"];
  for (const auto& f : c.morphisms)
    for (const auto& gm : c.morphisms)
      for (const auto& h : c.morphisms)
        if (qc_holds(c, g, f.id, gm.id, h.id)) s.rels["QC"].insert({f.id, gm.id, h.id});
  return s;
}

bool eval_homotopic(const FinCategory& c, const IsoGraph& g, const Formula& f, const Env& env) {
  if (f.contains_equality())
    fail("EqualityForbidden", "homotopic evaluation of a formula with equality");
  FinStructure s = qc_structure(c, g);
  return eval_formula(s, f, env);
}

bool qlim_holds(const FinCategory& c, const IsoGraph& g, const Diagram& d,
                size_t max_shape_objects, size_t max_shape_morphisms) {
  if (d.shape->objects.size() > max_shape_objects ||
      d.shape->morphisms.size() > max_shape_morphisms)
    fail("BoundsExceeded", "diagram shape too large for quasi-limit evaluation");

  auto classes = object_iso_classes(c);
  std::map<int, int> cls;
  std::vector<int> reps;
  for (size_t i = 0; i < classes.size(); ++i) {
    reps.push_back(classes[i].front());
    for (int o : classes[i]) cls[o] = static_cast<int>(i);
  }
  // quasi-morphism lists per (class, class)
  std::map<std::pair<int, int>, std::vector<int>> quasi;
  for (const auto& m : c.morphisms)
    quasi[{cls.at(m.dom), cls.at(m.cod)}].push_back(m.id);

  std::vector<int> shape_objs = d.shape->objects;
  std::vector<std::pair<int, int>> shape_edges;  // non-identity morphisms (id, unused)
  for (const auto& sm : d.shape->morphisms)
    if (d.shape->ids.at(sm.dom) != sm.id) shape_edges.push_back({sm.id, 0});

  auto leg_targets = [&](int apex_cls) {
    std::vector<const std::vector<int>*> lists;
    static const std::vector<int> kNone;
    for (int a : shape_objs) {
      auto it = quasi.find({apex_cls, cls.at(d.j.obj(a))});
      lists.push_back(it == quasi.end() ? &kNone : &it->second);
    }
    return lists;
  };

  auto is_qcone = [&](const std::vector<int>& legs) {
    for (const auto& [sid, unused] : shape_edges) {
      const auto* sm = d.shape->morphism(sid);
      size_t ia = std::find(shape_objs.begin(), shape_objs.end(), sm->dom) - shape_objs.begin();
      size_t ib = std::find(shape_objs.begin(), shape_objs.end(), sm->cod) - shape_objs.begin();
      if (!qc_holds(c, g, legs[ia], d.j.mor(sid), legs[ib])) return false;
    }
    return true;
  };

  // enumerate tuples over per-position lists
  auto for_tuples = [&](const std::vector<const std::vector<int>*>& lists,
                        const std::function<bool(const std::vector<int>&)>& fn) {
    std::vector<int> t(lists.size());
    std::function<bool(size_t)> rec = [&](size_t i) -> bool {
      if (i == lists.size()) return fn(t);
      for (int v : *lists[i]) {
        t[i] = v;
        if (!rec(i + 1)) return false;
      }
      return true;
    };
    return rec(0);
  };

  for (int apex_cls = 0; apex_cls < static_cast<int>(reps.size()); ++apex_cls) {
    auto lam_lists = leg_targets(apex_cls);
    bool found = false;
    for_tuples(lam_lists, [&](const std::vector<int>& lambda) {
      if (!is_qcone(lambda)) return true;
      // quasi-universality against every quasi-cone
      bool universal = true;
      for (int cone_cls = 0; cone_cls < static_cast<int>(reps.size()) && universal; ++cone_cls) {
        auto psi_lists = leg_targets(cone_cls);
        for_tuples(psi_lists, [&](const std::vector<int>& psi) {
          if (!is_qcone(psi)) return true;
          std::vector<int> mediators;
          auto it = quasi.find({cone_cls, apex_cls});
          if (it != quasi.end())
            for (int u : it->second) {
              bool ok = true;
              for (size_t a = 0; a < lambda.size() && ok; ++a)
                ok = qc_holds(c, g, u, lambda[a], psi[a]);
              if (ok) mediators.push_back(u);
            }
          if (mediators.empty()) {
            universal = false;
            return false;
          }
          for (size_t i = 0; i + 1 < mediators.size() && universal; ++i)
            for (size_t j = i + 1; j < mediators.size(); ++j)
              if (!quasi_equal(c, g, mediators[i], mediators[j])) {
                universal = false;
                return false;
              }
          return true;
        });
      }
      if (universal) {
        found = true;
        return false;
      }
      return true;
    });
    if (found) return true;
  }
  return false;
}

AgreementReport agreement_test(const CatPtr& c, const CatPtr& d, int depth, int max_size,
                               std::uint64_t budget, std::uint64_t seed) {
  AgreementReport rep;
  FinStructure sc = qc_structure(*c, build_isograph(c));
  FinStructure sd = qc_structure(*d, build_isograph(d));
  SentenceEnumerator en(lhomo_signature(), {depth, max_size, true});
  rep.space = en.count();
  auto check = [&](const Formula& f) {
    bool vc = eval_formula(sc, f);
    bool vd = eval_formula(sd, f);
    ++rep.checked;
    if (vc != vd) rep.mismatches.push_back({f, vc, vd});
  };
  if (rep.space <= budget) {
    rep.exhaustive = true;
    en.for_each([&](const Formula& f) {
      check(f);
      return true;
    });
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> dist(0, rep.space - 1);
    for (std::uint64_t i = 0; i < budget; ++i) check(en.unrank(dist(rng)));
  }
  return rep;
}

// ---- translation -----------------------------------------------------------

namespace {

struct Translator {
  std::set<std::string> used;
  int next = 0;

  std::string fresh() {
    std::string v;
    do {
      v = "q" + std::to_string(next++);
    } while (used.count(v));
    return v;
  }

  Formula is_iso_arrow(const std::string& a) {
    // (forall p)[(exists q) QC(a,p,q) -> QC(a,p,p)]
    std::string p = fresh(), q = fresh();
    Formula inner = Formula::implies(
        Formula::exists(q, "m", Formula::atom("QC", {Term::var(a), Term::var(p), Term::var(q)})),
        Formula::atom("QC", {Term::var(a), Term::var(p), Term::var(p)}));
    return Formula::forall(p, "m", std::move(inner));
  }

  Formula iso(const std::string& a, const std::string& b) {
    std::string w = fresh();
    return Formula::exists(
        w, "m",
        Formula::conj(is_iso_arrow(w), Formula::atom("QC", {Term::var(w), Term::var(a), Term::var(b)})));
  }

  // Returns the variable holding the term's value plus the defining
  // conjuncts and the existential binders introduced (innermost last).
  struct Handle {
    std::string var;
    std::vector<std::string> binders;
    std::vector<Formula> defs;
  };

  Handle term_handle(const Term& t) {
    switch (t.kind) {
      case Term::Kind::Var:
        return {t.name, {}, {}};
      case Term::Kind::Const:
        fail("SortError", "constants have no homotopic translation");
      case Term::Kind::App: {
        if (t.name == "Id") {
          // identity of an object: the object handle itself
          return object_handle(t.args[0]);
        }
        if (t.name == "comp") {
          Handle hg = term_handle(t.args[0]);
          Handle hf = term_handle(t.args[1]);
          std::string v = fresh();
          Handle out;
          out.var = v;
          out.binders = hg.binders;
          out.binders.insert(out.binders.end(), hf.binders.begin(), hf.binders.end());
          out.binders.push_back(v);
          out.defs = hg.defs;
          out.defs.insert(out.defs.end(), hf.defs.begin(), hf.defs.end());
          out.defs.push_back(
              Formula::atom("QC", {Term::var(hf.var), Term::var(hg.var), Term::var(v)}));
          return out;
        }
        if (t.name == "dom" || t.name == "rng") return object_handle(t);
        fail("SortError", "unknown category-language symbol " + t.name);
      }
    }
    fail("SortError", "unreachable");
  }

  // Object terms are represented by their identity arrows.
  Handle object_handle(const Term& t) {
    if (t.kind == Term::Kind::Var) return {t.name, {}, {}};
    if (t.kind == Term::Kind::App && (t.name == "dom" || t.name == "rng")) {
      Handle hm = term_handle(t.args[0]);
      std::string v = fresh();
      Handle out;
      out.binders = hm.binders;
      out.binders.push_back(v);
      out.defs = hm.defs;
      out.defs.push_back(is_iso_arrow(v));
      if (t.name == "dom")
        out.defs.push_back(Formula::atom("QC", {Term::var(v), Term::var(hm.var), Term::var(hm.var)}));
      else
        out.defs.push_back(Formula::atom("QC", {Term::var(hm.var), Term::var(v), Term::var(hm.var)}));
      out.var = v;
      return out;
    }
    if (t.kind == Term::Kind::App && t.name == "Id") return object_handle(t.args[0]);
    fail("SortError", "not an object term");
  }

  Formula wrap(const Handle& a, const Handle& b, Formula inner) {
    std::vector<Formula> defs = a.defs;
    defs.insert(defs.end(), b.defs.begin(), b.defs.end());
    for (auto it = defs.rbegin(); it != defs.rend(); ++it)
      inner = Formula::conj(*it, std::move(inner));
    std::vector<std::string> binders = a.binders;
    binders.insert(binders.end(), b.binders.begin(), b.binders.end());
    for (auto it = binders.rbegin(); it != binders.rend(); ++it)
      inner = Formula::exists(*it, "m", std::move(inner));
    return inner;
  }

  Formula go(const Formula& f) {
    switch (f.kind) {
      case Formula::Kind::Eq: {
        Handle a = term_handle(f.terms[0]);
        Handle b = term_handle(f.terms[1]);
        return wrap(a, b, iso(a.var, b.var));
      }
      case Formula::Kind::Atom:
        fail("SortError", "the category language has no relation atoms");
      case Formula::Kind::Not:
        return Formula::neg(go(f.sub[0]));
      case Formula::Kind::And:
      case Formula::Kind::Or:
      case Formula::Kind::Implies:
      case Formula::Kind::Iff:
        return Formula::binary(f.kind, go(f.sub[0]), go(f.sub[1]));
      case Formula::Kind::Forall:
        if (f.var_sort == "o")
          return Formula::forall(f.name, "m",
                                 Formula::implies(is_iso_arrow(f.name), go(f.sub[0])));
        return Formula::forall(f.name, "m", go(f.sub[0]));
      case Formula::Kind::Exists:
        if (f.var_sort == "o")
          return Formula::exists(f.name, "m", Formula::conj(is_iso_arrow(f.name), go(f.sub[0])));
        return Formula::exists(f.name, "m", go(f.sub[0]));
    }
    fail("SortError", "unreachable");
  }
};

void collect_var_names(const Formula& f, std::set<std::string>& out) {
  if (f.is_quantifier()) out.insert(f.name);
  for (const auto& t : f.terms) {
    std::vector<std::string> vs;
    t.collect_vars(vs);
    out.insert(vs.begin(), vs.end());
  }
  for (const auto& s : f.sub) collect_var_names(s, out);
}

}  // namespace

Formula translate_lcat(const Formula& f) {
  Translator tr;
  collect_var_names(f, tr.used);
  return tr.go(f);
}

}  // namespace catmod
