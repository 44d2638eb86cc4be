#include "catmod/ultra.hpp"

#include <algorithm>
#include <functional>

#include "catmod/cat_structure.hpp"
#include "catmod/errors.hpp"
#include "catmod/eval.hpp"

namespace catmod {

std::vector<std::string> validate_filter(const FilterOnX& f) {
  std::vector<std::string> out;
  std::set<int> x(f.x.begin(), f.x.end());
  if (x.size() != f.x.size()) out.push_back("index set has duplicates");
  if (f.members.empty()) out.push_back("filter is empty");
  for (const auto& s : f.members) {
    if (s.empty()) out.push_back("filter contains the empty set (improper)");
    for (int e : s)
      if (!x.count(e)) out.push_back("member contains an element outside the index set");
  }
  for (const auto& a : f.members)
    for (const auto& b : f.members) {
      std::set<int> inter;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                            std::inserter(inter, inter.begin()));
      if (!f.members.count(inter)) out.push_back("not closed under intersection");
    }
  for (const auto& a : f.members) {
    // supersets of a within X
    std::vector<int> extra;
    for (int e : x)
      if (!a.count(e)) extra.push_back(e);
    for (size_t mask = 1; mask < (size_t{1} << extra.size()); ++mask) {
      std::set<int> sup = a;
      for (size_t i = 0; i < extra.size(); ++i)
        if (mask & (size_t{1} << i)) sup.insert(extra[i]);
      if (!f.members.count(sup)) {
        out.push_back("not closed under superset");
        break;
      }
    }
  }
  if (f.ultra) {
    for (size_t mask = 0; mask < (size_t{1} << f.x.size()); ++mask) {
      std::set<int> s, comp;
      for (size_t i = 0; i < f.x.size(); ++i)
        (mask & (size_t{1} << i) ? s : comp).insert(f.x[i]);
      if (!f.members.count(s) && !f.members.count(comp)) {
        out.push_back("ultra flag set but some subset is undecided");
        break;
      }
    }
  }
  return out;
}

std::set<int> filter_core(const FilterOnX& f) {
  if (f.members.empty()) fail("ImproperFilter", "empty filter");
  std::set<int> core(f.x.begin(), f.x.end());
  for (const auto& s : f.members) {
    std::set<int> inter;
    std::set_intersection(core.begin(), core.end(), s.begin(), s.end(),
                          std::inserter(inter, inter.begin()));
    core = std::move(inter);
  }
  if (core.empty()) fail("ImproperFilter", "filter core is empty");
  return core;
}

namespace {
FilterOnX upward_closure(const std::vector<int>& x, const std::set<int>& base, bool ultra) {
  FilterOnX f;
  f.x = x;
  f.ultra = ultra;
  std::vector<int> extra;
  for (int e : x)
    if (!base.count(e)) extra.push_back(e);
  for (size_t mask = 0; mask < (size_t{1} << extra.size()); ++mask) {
    std::set<int> s = base;
    for (size_t i = 0; i < extra.size(); ++i)
      if (mask & (size_t{1} << i)) s.insert(extra[i]);
    f.members.insert(std::move(s));
  }
  return f;
}
}  // namespace

FilterOnX principal_ultrafilter(const std::vector<int>& x, int at) {
  if (std::find(x.begin(), x.end(), at) == x.end())
    fail("ImproperFilter", "principal point not in the index set");
  return upward_closure(x, {at}, true);
}

FilterOnX trivial_filter(const std::vector<int>& x) {
  return upward_closure(x, std::set<int>(x.begin(), x.end()), x.size() == 1);
}

std::vector<FilterOnX> enumerate_ultrafilters(const std::vector<int>& x, int size_cap) {
  if (static_cast<int>(x.size()) > size_cap)
    fail("BoundsExceeded", "index set larger than " + std::to_string(size_cap));
  std::vector<FilterOnX> out;
  for (int p : x) out.push_back(principal_ultrafilter(x, p));
  return out;
}

int ReducedProduct::class_of(const std::string& sort, const std::vector<int>& family) const {
  // Two families are equivalent iff they agree on the filter core.
  const auto& reps = class_reps.at(sort);
  for (size_t c = 0; c < reps.size(); ++c) {
    bool same = true;
    for (size_t i = 0; i < family.size() && same; ++i)
      same = !core_mask[i] || reps[c][i] == family[i];
    if (same) return static_cast<int>(c);
  }
  fail("SignatureMismatch", "family does not belong to the product carrier");
}

ReducedProduct reduced_product(const std::vector<StructPtr>& ms, const FilterOnX& f) {
  if (ms.size() != f.x.size())
    fail("SignatureMismatch", "family length differs from the index set size");
  if (ms.empty()) fail("ImproperFilter", "empty index set");
  auto errs = validate_filter(f);
  if (!errs.empty()) fail("ImproperFilter", errs.front());
  const Signature& sig = ms[0]->sig;
  for (const auto& m : ms)
    if (m->sig != sig) fail("SignatureMismatch", "factors over different signatures");
  std::set<int> core = filter_core(f);

  ReducedProduct out;
  out.quotient.sig = sig;
  out.core_mask.assign(ms.size(), false);
  std::vector<size_t> core_pos;
  for (size_t i = 0; i < f.x.size(); ++i)
    if (core.count(f.x[i])) {
      out.core_mask[i] = true;
      core_pos.push_back(i);
    }

  // Classes are determined by the core coordinates; the canonical
  // representative is the lexicographically least member family (core
  // values fixed, minimum carrier element elsewhere).
  for (const auto& sort : sig.sorts) {
    out.quotient.carriers[sort];
    out.class_reps[sort];
    bool empty = false;
    for (const auto& m : ms)
      if (m->carrier(sort).empty()) empty = true;
    if (empty) continue;
    std::vector<int> pads(ms.size());
    for (size_t i = 0; i < ms.size(); ++i)
      pads[i] = *std::min_element(ms[i]->carrier(sort).begin(), ms[i]->carrier(sort).end());
    std::vector<int> family = pads;
    std::function<void(size_t)> rec = [&](size_t k) {
      if (k == core_pos.size()) {
        int id = static_cast<int>(out.quotient.carriers[sort].size());
        out.quotient.carriers[sort].push_back(id);
        out.class_reps[sort].push_back(family);
        return;
      }
      size_t i = core_pos[k];
      std::vector<int> sorted = ms[i]->carrier(sort);
      std::sort(sorted.begin(), sorted.end());
      for (int e : sorted) {
        family[i] = e;
        rec(k + 1);
        family[i] = pads[i];
      }
    };
    rec(0);
  }

  for (const auto& [cn, cs] : sig.constants) {
    std::vector<int> family(ms.size());
    for (size_t i = 0; i < ms.size(); ++i) family[i] = ms[i]->consts.at(cn);
    out.quotient.consts[cn] = out.class_of(cs, family);
  }
  for (const auto& [fn, prof] : sig.functions) {
    out.quotient.funcs[fn];
    size_t arity = prof.args.size();
    const auto& arg_reps0 = out.class_reps;
    std::vector<int> cls(arity, 0);
    std::function<void(size_t)> rec = [&](size_t k) {
      if (k == arity) {
        // defined iff defined at every core position
        std::vector<int> value_family(ms.size());
        for (size_t i = 0; i < ms.size(); ++i) {
          std::vector<int> args(arity);
          for (size_t a = 0; a < arity; ++a)
            args[a] = arg_reps0.at(prof.args[a])[cls[a]][i];
          auto v = ms[i]->apply(fn, args);
          if (!v) {
            if (out.core_mask[i]) return;  // undefined in the quotient
            const auto& carrier = ms[i]->carrier(prof.result);
            value_family[i] = *std::min_element(carrier.begin(), carrier.end());
          } else {
            value_family[i] = *v;
          }
        }
        std::vector<int> key(arity);
        for (size_t a = 0; a < arity; ++a) key[a] = cls[a];
        out.quotient.funcs[fn][key] = out.class_of(prof.result, value_family);
        return;
      }
      for (size_t c = 0; c < arg_reps0.at(prof.args[k]).size(); ++c) {
        cls[k] = static_cast<int>(c);
        rec(k + 1);
      }
    };
    rec(0);
  }
  for (const auto& [rn, profile] : sig.relations) {
    out.quotient.rels[rn];
    size_t arity = profile.size();
    std::vector<int> cls(arity, 0);
    std::function<void(size_t)> rec = [&](size_t k) {
      if (k == arity) {
        bool holds = true;
        for (size_t i = 0; i < ms.size() && holds; ++i) {
          if (!out.core_mask[i]) continue;
          std::vector<int> args(arity);
          for (size_t a = 0; a < arity; ++a) args[a] = out.class_reps.at(profile[a])[cls[a]][i];
          holds = ms[i]->holds(rn, args);
        }
        if (holds) {
          std::vector<int> key(cls.begin(), cls.end());
          out.quotient.rels[rn].insert(key);
        }
        return;
      }
      for (size_t c = 0; c < out.class_reps.at(profile[k]).size(); ++c) {
        cls[k] = static_cast<int>(c);
        rec(k + 1);
      }
    };
    rec(0);
  }
  return out;
}

LosReport los_verify(const std::vector<StructPtr>& ms, const FilterOnX& u, const Formula& sentence,
                     int depth_cap) {
  if (sentence.quantifier_depth() > depth_cap)
    fail("BoundsExceeded", "sentence exceeds the depth cap " + std::to_string(depth_cap));
  LosReport rep;
  ReducedProduct rp = reduced_product(ms, u);
  rep.product_truth = eval_formula(rp.quotient, sentence);
  for (size_t i = 0; i < ms.size(); ++i)
    if (eval_formula(*ms[i], sentence)) rep.truth_set.insert(u.x[i]);
  rep.almost_everywhere = u.members.count(rep.truth_set) > 0;
  rep.ok = rep.product_truth == rep.almost_everywhere;
  return rep;
}

DiagonalEmbedding diagonal_embedding(const StructPtr& m, const FilterOnX& u) {
  DiagonalEmbedding out;
  std::vector<StructPtr> family(u.x.size(), m);
  out.power = reduced_product(family, u);
  out.embedding.source = m;
  out.embedding.target = share(out.power.quotient);
  out.embedding.strong = true;
  for (const auto& [sort, carrier] : m->carriers) {
    out.embedding.maps[sort];
    for (int e : carrier) {
      std::vector<int> constant(u.x.size(), e);
      out.embedding.maps[sort][e] = out.power.class_of(sort, constant);
    }
  }
  return out;
}

UltrapowerEmbedding ultrapower_embedding(const ModelCategory& bundle, const FilterOnX& u) {
  UltrapowerEmbedding out;
  StructPtr enc = share(structure_from_category(*bundle.cat));
  std::vector<StructPtr> family(u.x.size(), enc);
  ReducedProduct rp = reduced_product(family, u);

  FinCategory ul;
  try {
    ul = category_from_structure(rp.quotient);
  } catch (const Error& e) {
    out.problems.push_back(std::string("ultrapower is not a category: ") + e.what());
    return out;
  }
  out.ultrapower = share(std::move(ul));
  out.object_reps = rp.class_reps.at("o");
  out.morphism_reps = rp.class_reps.at("m");

  // i on objects: reduced product of the represented model families; the
  // underlying-set functor computed independently through set reducts.
  std::vector<StructPtr> obj_structs;
  for (const auto& reps : out.object_reps) {
    std::vector<StructPtr> models, sets;
    for (size_t i = 0; i < reps.size(); ++i) {
      models.push_back(bundle.model_ptr(reps[i]));
      sets.push_back(share(set_reduct(bundle.models.at(reps[i]))));
    }
    ReducedProduct irp = reduced_product(models, u);
    ReducedProduct srp = reduced_product(sets, u);
    out.object_structure.push_back(irp.quotient);
    out.underlying_sets.push_back(srp.quotient);
    if (irp.quotient.carriers != srp.quotient.carriers ||
        irp.class_reps != srp.class_reps)
      out.problems.push_back("underlying-set functor disagrees with the structure carrier");
    obj_structs.push_back(share(irp.quotient));
  }

  // i on morphisms: the induced maps on agreement classes.
  std::set<int> core = filter_core(u);
  std::vector<bool> core_mask(u.x.size(), false);
  for (size_t i = 0; i < u.x.size(); ++i)
    if (core.count(u.x[i])) core_mask[i] = true;

  const FinCategory& cat = *out.ultrapower;
  for (const auto& mrec : cat.morphisms) {
    const auto& reps = out.morphism_reps.at(mrec.id);
    // The factor homomorphisms act coordinatewise on the agreement classes;
    // only the core coordinates matter for the image class.
    std::vector<StructPtr> dom_models, cod_models;
    for (size_t i = 0; i < reps.size(); ++i) {
      dom_models.push_back(bundle.model_ptr(bundle.cat->dom(reps[i])));
      cod_models.push_back(bundle.model_ptr(bundle.cat->cod(reps[i])));
    }
    ReducedProduct drp = reduced_product(dom_models, u);
    ReducedProduct crp = reduced_product(cod_models, u);
    Homomorphism h;
    h.source = obj_structs.at(mrec.dom);
    h.target = obj_structs.at(mrec.cod);
    h.strong = bundle.strong;
    for (const auto& [sort, classes] : drp.class_reps) {
      h.maps[sort];
      for (size_t c = 0; c < classes.size(); ++c) {
        const auto& fam = classes[c];
        std::vector<int> image(fam.size());
        for (size_t i = 0; i < fam.size(); ++i) {
          const Homomorphism& hx = bundle.homs.at(reps[i]);
          if (core_mask[i]) {
            image[i] = hx.maps.at(sort).at(fam[i]);
          } else {
            const auto& cc = cod_models[i]->carrier(sort);
            image[i] = *std::min_element(cc.begin(), cc.end());
          }
        }
        h.maps[sort][static_cast<int>(c)] = crp.class_of(sort, image);
      }
    }
    if (!validate_homomorphism(h).empty())
      out.problems.push_back("image of morphism " + std::to_string(mrec.id) +
                             " is not a homomorphism");
    out.morphism_hom.push_back(std::move(h));
  }

  // functoriality and embedding checks
  auto key = [](const Homomorphism& h) {
    std::vector<int> k;
    for (const auto& [s, m] : h.maps)
      for (const auto& [e, v] : m) k.push_back(v);
    return k;
  };
  for (const auto& [o, idm] : cat.ids) {
    if (key(out.morphism_hom.at(idm)) != key(identity_hom(obj_structs.at(o))))
      out.problems.push_back("identity of object " + std::to_string(o) + " not preserved");
  }
  for (const auto& [gf, hcomp] : cat.comp) {
    Homomorphism composite =
        compose(out.morphism_hom.at(gf.first), out.morphism_hom.at(gf.second));
    if (key(composite) != key(out.morphism_hom.at(hcomp)))
      out.problems.push_back("composition not preserved in the embedding");
  }
  for (size_t a = 0; a < out.object_structure.size(); ++a)
    for (size_t b = a + 1; b < out.object_structure.size(); ++b)
      if (out.object_structure[a] == out.object_structure[b])
        out.problems.push_back("embedding not injective on objects");
  for (const auto& ma : cat.morphisms)
    for (const auto& mb : cat.morphisms) {
      if (ma.id >= mb.id || ma.dom != mb.dom || ma.cod != mb.cod) continue;
      if (key(out.morphism_hom.at(ma.id)) == key(out.morphism_hom.at(mb.id)))
        out.problems.push_back("embedding not faithful");
    }

  // hom-set ultraproduct cardinalities
  for (const auto& pa : cat.objects)
    for (const auto& pb : cat.objects) {
      size_t expect = 1;
      for (size_t i = 0; i < u.x.size(); ++i) {
        if (!core_mask[i]) continue;
        expect *= bundle.cat->hom(out.object_reps[pa][i], out.object_reps[pb][i]).size();
      }
      if (cat.hom(pa, pb).size() != expect)
        out.problems.push_back("hom-set size of (" + std::to_string(pa) + "," +
                               std::to_string(pb) + ") differs from the factor ultraproduct");
    }
  return out;
}

}  // namespace catmod
