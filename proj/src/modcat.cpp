#include "catmod/modcat.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "catmod/errors.hpp"
#include "catmod/hom_search.hpp"
#include "catmod/model_enum.hpp"
#include "catmod/term_algebra.hpp"

namespace catmod {

StructPtr ModelCategory::model_ptr(int object) const {
  return share(models.at(static_cast<size_t>(object)));
}

namespace {

std::vector<int> hom_key(const Homomorphism& h) {
  std::vector<int> key;
  for (const auto& [s, m] : h.maps)
    for (const auto& [e, v] : m) key.push_back(v);
  return key;
}

}  // namespace

ModelCategory build_model_category(const Theory& t, int max_size, bool strong, int size_cap) {
  ModelCategory mc;
  mc.theory = t;
  mc.max_size = max_size;
  mc.strong = strong;
  mc.models = enumerate_models(t, max_size, size_cap);

  std::vector<StructPtr> ptrs;
  for (const auto& m : mc.models) ptrs.push_back(share(m));

  FinCategory cat;
  for (int i = 0; i < static_cast<int>(mc.models.size()); ++i) cat.objects.push_back(i);

  // morphism ids in (dom, cod, search order); lookup key (dom, cod, images)
  std::map<std::tuple<int, int, std::vector<int>>, int> index;
  for (int a = 0; a < static_cast<int>(ptrs.size()); ++a)
    for (int b = 0; b < static_cast<int>(ptrs.size()); ++b)
      for (auto& h : enumerate_homomorphisms(ptrs[a], ptrs[b], strong)) {
        int id = static_cast<int>(mc.homs.size());
        cat.morphisms.push_back({id, a, b});
        index[{a, b, hom_key(h)}] = id;
        mc.homs.push_back(std::move(h));
      }

  for (int a = 0; a < static_cast<int>(ptrs.size()); ++a) {
    Homomorphism id_hom = identity_hom(ptrs[a]);
    cat.ids[a] = index.at({a, a, hom_key(id_hom)});
  }
  for (const auto& mf : cat.morphisms)
    for (const auto& mg : cat.morphisms) {
      if (mf.cod != mg.dom) continue;
      Homomorphism gf = compose(mc.homs[mg.id], mc.homs[mf.id]);
      cat.comp[{mg.id, mf.id}] = index.at({mf.dom, mg.cod, hom_key(gf)});
    }
  mc.cat = share(std::move(cat));
  return mc;
}

CoequalizerResult coequalizer(const Homomorphism& f, const Homomorphism& g) {
  if (*f.source != *g.source || *f.target != *g.target)
    fail("NotParallel", "coequalizer requires a parallel pair");
  const FinStructure& a = *f.source;
  const FinStructure& b = *f.target;

  // union-find over (sort, element)
  std::map<std::pair<std::string, int>, std::pair<std::string, int>> parent;
  std::function<std::pair<std::string, int>(std::pair<std::string, int>)> find =
      [&](std::pair<std::string, int> x) {
        while (parent.at(x) != x) {
          parent[x] = parent.at(parent.at(x));
          x = parent.at(x);
        }
        return x;
      };
  auto unite = [&](std::pair<std::string, int> x, std::pair<std::string, int> y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (y < x) std::swap(x, y);
    parent[y] = x;
    return true;
  };
  for (const auto& [s, c] : b.carriers)
    for (int e : c) parent[{s, e}] = {s, e};
  for (const auto& [s, c] : a.carriers)
    for (int e : c) unite({s, f.maps.at(s).at(e)}, {s, g.maps.at(s).at(e)});

  // The relation must also be a congruence for the quotient interpretation
  // to be well-defined; close under every function symbol until fixpoint.
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [fn, table] : b.funcs) {
      const auto& prof = b.sig.functions.at(fn);
      for (const auto& [args1, val1] : table)
        for (const auto& [args2, val2] : table) {
          bool congruent = true;
          for (size_t i = 0; i < args1.size() && congruent; ++i)
            congruent = find({prof.args[i], args1[i]}) == find({prof.args[i], args2[i]});
          if (congruent && unite({prof.result, val1}, {prof.result, val2})) changed = true;
        }
    }
  }

  CoequalizerResult out;
  out.quotient.sig = b.sig;
  std::map<std::pair<std::string, int>, int> cls;
  for (const auto& [s, c] : b.carriers) {
    out.quotient.carriers[s];
    for (int e : c) {
      auto root = find({s, e});
      if (!cls.count(root)) {
        int id = static_cast<int>(out.quotient.carriers[s].size());
        cls[root] = id;
        out.quotient.carriers[s].push_back(id);
        out.classes.push_back({});
      }
    }
  }
  auto class_of = [&](const std::string& s, int e) { return cls.at(find({s, e})); };
  {
    size_t offset = 0;
    std::map<std::string, size_t> base;
    for (const auto& [s, c] : out.quotient.carriers) {
      base[s] = offset;
      offset += c.size();
    }
    out.classes.assign(offset, {});
    for (const auto& [s, c] : b.carriers)
      for (int e : c) out.classes[base[s] + class_of(s, e)].push_back(e);
  }

  for (const auto& [cn, v] : b.consts) out.quotient.consts[cn] = class_of(b.sig.constants.at(cn), v);
  for (const auto& [fn, table] : b.funcs) {
    const auto& prof = b.sig.functions.at(fn);
    out.quotient.funcs[fn];
    for (const auto& [args, val] : table) {
      std::vector<int> im(args.size());
      for (size_t i = 0; i < args.size(); ++i) im[i] = class_of(prof.args[i], args[i]);
      out.quotient.funcs[fn][im] = class_of(prof.result, val);
    }
  }
  for (const auto& [rn, tuples] : b.rels) {
    const auto& profile = b.sig.relations.at(rn);
    out.quotient.rels[rn];
    for (const auto& t : tuples) {
      std::vector<int> im(t.size());
      for (size_t i = 0; i < t.size(); ++i) im[i] = class_of(profile[i], t[i]);
      out.quotient.rels[rn].insert(im);
    }
  }

  out.projection.source = f.target;
  out.projection.target = share(out.quotient);
  for (const auto& [s, c] : b.carriers) {
    out.projection.maps[s];
    for (int e : c) out.projection.maps[s][e] = class_of(s, e);
  }
  return out;
}

std::vector<std::string> coequalizer_universal_report(const Homomorphism& f,
                                                      const Homomorphism& g,
                                                      const CoequalizerResult& coeq,
                                                      const std::vector<StructPtr>& targets) {
  std::vector<std::string> out;
  const Homomorphism& p = coeq.projection;
  {
    auto pf = compose(p, f);
    auto pg = compose(p, g);
    if (hom_key(pf) != hom_key(pg)) out.push_back("projection does not equalize the pair");
    if (!surjective(p)) out.push_back("projection is not surjective");
    if (!validate_homomorphism(p).empty()) out.push_back("projection is not a homomorphism");
  }
  StructPtr c = p.target;
  for (size_t ti = 0; ti < targets.size(); ++ti) {
    auto mediators = enumerate_homomorphisms(c, targets[ti]);
    for (const auto& q : enumerate_homomorphisms(f.target, targets[ti])) {
      if (hom_key(compose(q, f)) != hom_key(compose(q, g))) continue;
      int count = 0;
      for (const auto& u : mediators)
        if (hom_key(compose(u, p)) == hom_key(q)) ++count;
      if (count != 1)
        out.push_back("target " + std::to_string(ti) + ": factorization count " +
                      std::to_string(count) + " for a coequalizing map");
    }
  }
  return out;
}

CoproductResult coproduct_unary(const std::vector<StructPtr>& ms) {
  CoproductResult out;
  if (ms.empty()) return out;
  const Signature& sig = ms[0]->sig;
  if (!sig.constants.empty()) fail("SignatureNotUnary", "signature has constant symbols");
  for (const auto& [fn, prof] : sig.functions)
    if (prof.args.size() != 1) fail("SignatureNotUnary", "function " + fn + " is not unary");
  for (const auto& m : ms)
    if (m->sig != sig) fail("SignatureMismatch", "coproduct factors over different signatures");

  out.sum.sig = sig;
  std::vector<std::map<std::pair<std::string, int>, int>> embed(ms.size());
  for (const auto& s : sig.sorts) out.sum.carriers[s];
  for (size_t i = 0; i < ms.size(); ++i)
    for (const auto& s : sig.sorts)
      for (int e : ms[i]->carrier(s)) {
        int id = static_cast<int>(out.sum.carriers[s].size());
        out.sum.carriers[s].push_back(id);
        embed[i][{s, e}] = id;
      }
  for (const auto& [fn, prof] : sig.functions) out.sum.funcs[fn];
  for (const auto& [rn, profile] : sig.relations) out.sum.rels[rn];
  for (size_t i = 0; i < ms.size(); ++i) {
    for (const auto& [fn, table] : ms[i]->funcs) {
      const auto& prof = sig.functions.at(fn);
      for (const auto& [args, val] : table)
        out.sum.funcs[fn][{embed[i].at({prof.args[0], args[0]})}] =
            embed[i].at({prof.result, val});
    }
    for (const auto& [rn, tuples] : ms[i]->rels) {
      const auto& profile = sig.relations.at(rn);
      for (const auto& t : tuples) {
        std::vector<int> im(t.size());
        for (size_t k = 0; k < t.size(); ++k) im[k] = embed[i].at({profile[k], t[k]});
        out.sum.rels[rn].insert(im);
      }
    }
  }
  StructPtr sum = share(out.sum);
  for (size_t i = 0; i < ms.size(); ++i) {
    Homomorphism inj;
    inj.source = ms[i];
    inj.target = sum;
    for (const auto& s : sig.sorts) inj.maps[s];
    for (const auto& [key, v] : embed[i]) inj.maps[key.first][key.second] = v;
    out.injections.push_back(std::move(inj));
  }
  return out;
}

std::vector<std::string> coproduct_universal_report(const CoproductResult& cp,
                                                    const std::vector<StructPtr>& targets) {
  std::vector<std::string> out;
  for (const auto& inj : cp.injections)
    if (!validate_homomorphism(inj).empty()) out.push_back("an injection is not a homomorphism");
  StructPtr sum =
      cp.injections.empty() ? share(cp.sum) : cp.injections.front().target;
  for (size_t ti = 0; ti < targets.size(); ++ti) {
    // maps from every factor jointly = maps from the sum
    std::vector<std::vector<Homomorphism>> factor_homs;
    size_t combos = 1;
    for (const auto& inj : cp.injections) {
      factor_homs.push_back(enumerate_homomorphisms(inj.source, targets[ti]));
      combos *= factor_homs.back().size();
    }
    auto sum_homs = enumerate_homomorphisms(sum, targets[ti]);
    for (size_t pick = 0; pick < combos; ++pick) {
      size_t rest = pick;
      std::vector<const Homomorphism*> chosen;
      for (const auto& fh : factor_homs) {
        chosen.push_back(&fh[rest % fh.size()]);
        rest /= fh.size();
      }
      int count = 0;
      for (const auto& u : sum_homs) {
        bool all = true;
        for (size_t i = 0; i < chosen.size() && all; ++i)
          all = hom_key(compose(u, cp.injections[i])) == hom_key(*chosen[i]);
        if (all) ++count;
      }
      if (count != 1)
        out.push_back("target " + std::to_string(ti) + ": cocone factorization count " +
                      std::to_string(count));
    }
  }
  return out;
}

std::vector<FinStructure> theta_family(const Signature& sig, int expansion_cap) {
  TermAlgebra t = term_algebra(sig.fct());
  FinStructure base = t.algebra;
  base.sig = sig;
  base.rels.clear();

  // all relation interpretations over the term-algebra carrier
  std::vector<std::pair<std::string, std::vector<std::vector<int>>>> slots;
  long long total = 1;
  for (const auto& [rn, profile] : sig.relations) {
    std::vector<const std::vector<int>*> doms;
    for (const auto& s : profile) doms.push_back(&base.carrier(s));
    std::vector<std::vector<int>> tuples;
    std::vector<int> cur(profile.size());
    std::function<void(size_t)> rec = [&](size_t i) {
      if (i == profile.size()) {
        tuples.push_back(cur);
        return;
      }
      for (int e : *doms[i]) {
        cur[i] = e;
        rec(i + 1);
      }
    };
    rec(0);
    slots.push_back({rn, tuples});
    for (size_t k = 0; k < tuples.size(); ++k) {
      total *= 2;
      if (total > expansion_cap) fail("BoundsExceeded", "too many relation expansions");
    }
  }

  std::vector<FinStructure> out;
  std::function<void(size_t, FinStructure&)> rec = [&](size_t si, FinStructure& acc) {
    if (si == slots.size()) {
      out.push_back(acc);
      return;
    }
    const auto& [rn, tuples] = slots[si];
    std::function<void(size_t)> pick = [&](size_t ti) {
      if (ti == tuples.size()) {
        rec(si + 1, acc);
        return;
      }
      pick(ti + 1);
      acc.rels[rn].insert(tuples[ti]);
      pick(ti + 1);
      acc.rels[rn].erase(tuples[ti]);
    };
    pick(0);
  };
  for (const auto& [rn, profile] : sig.relations) base.rels[rn];
  rec(0, base);
  return out;
}

}  // namespace catmod
