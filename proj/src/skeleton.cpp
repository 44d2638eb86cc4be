#include "catmod/skeleton.hpp"

#include <algorithm>

#include "catmod/cat_structure.hpp"
#include "catmod/hom_search.hpp"

namespace catmod {

bool is_isomorphism(const FinCategory& c, int m) { return inverse_morphism(c, m).has_value(); }

std::optional<int> inverse_morphism(const FinCategory& c, int m) {
  int a = c.dom(m), b = c.cod(m);
  for (int g : c.hom(b, a)) {
    auto gm = c.compose(g, m);
    auto mg = c.compose(m, g);
    if (gm && mg && *gm == c.ids.at(a) && *mg == c.ids.at(b)) return g;
  }
  return std::nullopt;
}

namespace {
bool objects_isomorphic(const FinCategory& c, int a, int b) {
  if (a == b) return true;
  for (int m : c.hom(a, b))
    if (is_isomorphism(c, m)) return true;
  return false;
}
}  // namespace

std::vector<std::vector<int>> object_iso_classes(const FinCategory& c) {
  std::vector<int> objs = c.objects;
  std::sort(objs.begin(), objs.end());
  std::vector<std::vector<int>> classes;
  for (int o : objs) {
    bool placed = false;
    for (auto& cl : classes)
      if (objects_isomorphic(c, cl.front(), o)) {
        cl.push_back(o);
        placed = true;
        break;
      }
    if (!placed) classes.push_back({o});
  }
  return classes;
}

SkeletonResult skeleton_of(const CatPtr& c) {
  SkeletonResult out;
  auto classes = object_iso_classes(*c);
  std::vector<int> reps;
  for (const auto& cl : classes) {
    int rep = cl.front();  // least id: classes collect sorted objects
    reps.push_back(rep);
    for (int o : cl) {
      out.rep[o] = rep;
      if (o == rep) {
        out.sigma[o] = c->ids.at(o);
      } else {
        for (int m : c->hom(rep, o))
          if (is_isomorphism(*c, m)) {
            out.sigma[o] = m;
            break;
          }
      }
    }
  }
  out.skeleton = share(full_subcategory(*c, reps));
  out.projection.source = c;
  out.projection.target = out.skeleton;
  for (int o : c->objects) out.projection.omap[o] = out.rep.at(o);
  for (const auto& m : c->morphisms) {
    int sa = out.sigma.at(m.dom);
    int sb_inv = *inverse_morphism(*c, out.sigma.at(m.cod));
    int v = *c->compose(m.id, sa);
    out.projection.mmap[m.id] = *c->compose(sb_inv, v);
  }
  return out;
}

std::optional<EquivalenceWitness> are_equivalent(const CatPtr& c, const CatPtr& d) {
  SkeletonResult sc = skeleton_of(c);
  SkeletonResult sd = skeleton_of(d);
  StructPtr enc_c = share(structure_from_category(*sc.skeleton));
  StructPtr enc_d = share(structure_from_category(*sd.skeleton));
  auto iso = are_isomorphic(enc_c, enc_d);
  if (!iso) return std::nullopt;

  Functor h = functor_from_hom(sc.skeleton, sd.skeleton, *iso);
  Functor h_inv;
  h_inv.source = sd.skeleton;
  h_inv.target = sc.skeleton;
  for (const auto& [o, v] : h.omap) h_inv.omap[v] = o;
  for (const auto& [m, v] : h.mmap) h_inv.mmap[v] = m;

  auto include = [](const CatPtr& sub, const CatPtr& host) {
    Functor f;
    f.source = sub;
    f.target = host;
    for (int o : sub->objects) f.omap[o] = o;
    for (const auto& m : sub->morphisms) f.mmap[m.id] = m.id;
    return f;
  };

  EquivalenceWitness w;
  w.to = compose_functors(include(sd.skeleton, d), compose_functors(h, sc.projection));
  w.from = compose_functors(include(sc.skeleton, c), compose_functors(h_inv, sd.projection));
  for (int a : c->objects) w.unit[a] = *inverse_morphism(*c, sc.sigma.at(a));
  for (int b : d->objects) w.counit[b] = sd.sigma.at(b);
  return w;
}

}  // namespace catmod
