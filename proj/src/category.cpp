#include "catmod/category.hpp"

#include <algorithm>
#include <set>

#include "catmod/errors.hpp"

namespace catmod {

const MorphismRec* FinCategory::morphism(int id) const {
  for (const auto& m : morphisms)
    if (m.id == id) return &m;
  return nullptr;
}

bool FinCategory::has_object(int o) const {
  return std::find(objects.begin(), objects.end(), o) != objects.end();
}

std::optional<int> FinCategory::compose(int g, int f) const {
  auto it = comp.find({g, f});
  if (it == comp.end()) return std::nullopt;
  return it->second;
}

std::vector<int> FinCategory::hom(int a, int b) const {
  std::vector<int> out;
  for (const auto& m : morphisms)
    if (m.dom == a && m.cod == b) out.push_back(m.id);
  return out;
}

bool FinCategory::is_identity(int m) const {
  auto it = ids.find(dom(m));
  return it != ids.end() && it->second == m;
}

std::vector<CatViolation> validate_category(const FinCategory& c) {
  std::vector<CatViolation> out;
  std::set<int> obj_set(c.objects.begin(), c.objects.end());
  if (obj_set.size() != c.objects.size()) out.push_back({0, "duplicate object ids"});
  std::set<int> mor_set;
  for (const auto& m : c.morphisms) {
    if (!mor_set.insert(m.id).second)
      out.push_back({0, "duplicate morphism id " + std::to_string(m.id)});
    if (!obj_set.count(m.dom) || !obj_set.count(m.cod))
      out.push_back({0, "morphism " + std::to_string(m.id) + " has dangling dom/cod"});
  }
  if (!out.empty()) return out;

  auto name = [](int m) { return std::to_string(m); };

  // Composition table shape: defined exactly on composable pairs.
  for (const auto& [gf, h] : c.comp) {
    auto [g, f] = gf;
    const auto* mf = c.morphism(f);
    const auto* mg = c.morphism(g);
    const auto* mh = c.morphism(h);
    if (!mf || !mg || !mh) {
      out.push_back({0, "composition entry references unknown morphism"});
      continue;
    }
    if (mf->cod != mg->dom)
      out.push_back({0, "composition defined on non-composable pair (" + name(g) + "," + name(f) + ")"});
  }
  for (const auto& mf : c.morphisms)
    for (const auto& mg : c.morphisms) {
      if (mf.cod != mg.dom) continue;
      auto comp = c.compose(mg.id, mf.id);
      if (!comp) {
        out.push_back({1, "composite of composable pair (" + name(mg.id) + "," + name(mf.id) +
                              ") is undefined"});
        continue;
      }
      const auto* mh = c.morphism(*comp);
      if (mh->dom != mf.dom || mh->cod != mg.cod)
        out.push_back({1, "dom/cod of composite " + name(*comp) + " of (" + name(mg.id) + "," +
                              name(mf.id) + ") are wrong"});
    }

  // Associativity on composable triples.
  for (const auto& mf : c.morphisms)
    for (const auto& mg : c.morphisms) {
      if (mf.cod != mg.dom) continue;
      for (const auto& mh : c.morphisms) {
        if (mg.cod != mh.dom) continue;
        auto gf = c.compose(mg.id, mf.id);
        auto hg = c.compose(mh.id, mg.id);
        if (!gf || !hg) continue;  // reported above
        auto l = c.compose(mh.id, *gf);
        auto r = c.compose(*hg, mf.id);
        if (l && r && *l != *r)
          out.push_back({2, "associativity fails on (" + name(mh.id) + "," + name(mg.id) + "," +
                                name(mf.id) + ")"});
      }
    }

  // Identity laws.
  for (int o : c.objects) {
    auto it = c.ids.find(o);
    if (it == c.ids.end()) {
      out.push_back({3, "object " + std::to_string(o) + " has no identity"});
      continue;
    }
    const auto* mi = c.morphism(it->second);
    if (!mi || mi->dom != o || mi->cod != o) {
      out.push_back({3, "identity of object " + std::to_string(o) + " is not an endomorphism"});
      continue;
    }
  }
  for (const auto& m : c.morphisms) {
    auto dit = c.ids.find(m.dom);
    auto cit = c.ids.find(m.cod);
    if (dit != c.ids.end()) {
      auto r = c.compose(m.id, dit->second);
      if (r && *r != m.id)
        out.push_back({3, "right identity law fails for morphism " + name(m.id)});
    }
    if (cit != c.ids.end()) {
      auto l = c.compose(cit->second, m.id);
      if (l && *l != m.id)
        out.push_back({3, "left identity law fails for morphism " + name(m.id)});
    }
  }
  return out;
}

FinCategory opposite(const FinCategory& c) {
  FinCategory op;
  op.objects = c.objects;
  for (const auto& m : c.morphisms) op.morphisms.push_back({m.id, m.cod, m.dom});
  for (const auto& [gf, h] : c.comp) op.comp[{gf.second, gf.first}] = h;
  op.ids = c.ids;
  return op;
}

FinCategory full_subcategory(const FinCategory& c, const std::vector<int>& objects) {
  FinCategory s;
  std::set<int> keep(objects.begin(), objects.end());
  for (int o : c.objects)
    if (keep.count(o)) s.objects.push_back(o);
  std::set<int> kept_mor;
  for (const auto& m : c.morphisms)
    if (keep.count(m.dom) && keep.count(m.cod)) {
      s.morphisms.push_back(m);
      kept_mor.insert(m.id);
    }
  for (const auto& [gf, h] : c.comp)
    if (kept_mor.count(gf.first) && kept_mor.count(gf.second)) s.comp[gf] = h;
  for (const auto& [o, i] : c.ids)
    if (keep.count(o)) s.ids[o] = i;
  return s;
}

FinCategory disjoint_union(const FinCategory& a, const FinCategory& b) {
  FinCategory u = a;
  int oshift = 0, mshift = 0;
  for (int o : a.objects) oshift = std::max(oshift, o + 1);
  for (const auto& m : a.morphisms) mshift = std::max(mshift, m.id + 1);
  for (int o : b.objects) u.objects.push_back(o + oshift);
  for (const auto& m : b.morphisms)
    u.morphisms.push_back({m.id + mshift, m.dom + oshift, m.cod + oshift});
  for (const auto& [gf, h] : b.comp)
    u.comp[{gf.first + mshift, gf.second + mshift}] = h + mshift;
  for (const auto& [o, i] : b.ids) u.ids[o + oshift] = i + mshift;
  return u;
}

std::vector<std::string> validate_functor(const Functor& f) {
  std::vector<std::string> out;
  const FinCategory& c = *f.source;
  const FinCategory& d = *f.target;
  for (int o : c.objects) {
    auto it = f.omap.find(o);
    if (it == f.omap.end())
      out.push_back("object " + std::to_string(o) + " unmapped");
    else if (!d.has_object(it->second))
      out.push_back("object " + std::to_string(o) + " maps outside the target");
  }
  for (const auto& m : c.morphisms) {
    auto it = f.mmap.find(m.id);
    if (it == f.mmap.end()) {
      out.push_back("morphism " + std::to_string(m.id) + " unmapped");
      continue;
    }
    const auto* im = d.morphism(it->second);
    if (!im) {
      out.push_back("morphism " + std::to_string(m.id) + " maps outside the target");
      continue;
    }
    if (im->dom != f.omap.at(m.dom) || im->cod != f.omap.at(m.cod))
      out.push_back("morphism " + std::to_string(m.id) + " breaks dom/cod");
  }
  if (!out.empty()) return out;
  for (const auto& [o, i] : c.ids)
    if (f.mmap.at(i) != d.ids.at(f.omap.at(o)))
      out.push_back("identity of object " + std::to_string(o) + " not preserved");
  for (const auto& [gf, h] : c.comp) {
    auto img = d.compose(f.mmap.at(gf.first), f.mmap.at(gf.second));
    if (!img || *img != f.mmap.at(h))
      out.push_back("composition not preserved at (" + std::to_string(gf.first) + "," +
                    std::to_string(gf.second) + ")");
  }
  return out;
}

bool functor_faithful(const Functor& f) {
  // injective on each hom-set
  for (int a : f.source->objects)
    for (int b : f.source->objects) {
      auto hom = f.source->hom(a, b);
      std::set<int> images;
      for (int m : hom)
        if (!images.insert(f.mmap.at(m)).second) return false;
    }
  return true;
}

bool functor_full(const Functor& f) {
  for (int a : f.source->objects)
    for (int b : f.source->objects) {
      std::set<int> images;
      for (int m : f.source->hom(a, b)) images.insert(f.mmap.at(m));
      for (int n : f.target->hom(f.omap.at(a), f.omap.at(b)))
        if (!images.count(n)) return false;
    }
  return true;
}

bool functor_injective_on_objects(const Functor& f) {
  std::set<int> seen;
  for (int o : f.source->objects)
    if (!seen.insert(f.omap.at(o)).second) return false;
  return true;
}

Functor identity_functor(const CatPtr& c) {
  Functor f;
  f.source = f.target = c;
  for (int o : c->objects) f.omap[o] = o;
  for (const auto& m : c->morphisms) f.mmap[m.id] = m.id;
  return f;
}

Functor compose_functors(const Functor& g, const Functor& f) {
  Functor h;
  h.source = f.source;
  h.target = g.target;
  for (const auto& [o, v] : f.omap) h.omap[o] = g.omap.at(v);
  for (const auto& [m, v] : f.mmap) h.mmap[m] = g.mmap.at(v);
  return h;
}

std::vector<std::string> validate_diagram(const Diagram& d) {
  auto out = validate_functor(d.j);
  if (d.j.source != d.shape) out.push_back("diagram functor source is not the shape");
  return out;
}

namespace {
CatPtr discrete_shape(int n) {
  FinCategory s;
  for (int i = 0; i < n; ++i) {
    s.objects.push_back(i);
    s.morphisms.push_back({i, i, i});
    s.ids[i] = i;
    s.comp[{i, i}] = i;
  }
  return share(std::move(s));
}

CatPtr parallel_pair_shape() {
  FinCategory s;
  s.objects = {0, 1};
  s.morphisms = {{0, 0, 0}, {1, 1, 1}, {2, 0, 1}, {3, 0, 1}};
  s.ids = {{0, 0}, {1, 1}};
  s.comp[{0, 0}] = 0;
  s.comp[{1, 1}] = 1;
  s.comp[{1, 2}] = 2;
  s.comp[{2, 0}] = 2;
  s.comp[{1, 3}] = 3;
  s.comp[{3, 0}] = 3;
  return share(std::move(s));
}
}  // namespace

Diagram discrete_pair_diagram(const CatPtr& host, int a, int b) {
  Diagram d;
  d.shape = discrete_shape(2);
  d.j.source = d.shape;
  d.j.target = host;
  d.j.omap = {{0, a}, {1, b}};
  d.j.mmap = {{0, host->ids.at(a)}, {1, host->ids.at(b)}};
  return d;
}

Diagram parallel_pair_diagram(const CatPtr& host, int f, int g) {
  if (host->dom(f) != host->dom(g) || host->cod(f) != host->cod(g))
    fail("NotParallel", "parallel pair diagram requires parallel morphisms");
  Diagram d;
  d.shape = parallel_pair_shape();
  d.j.source = d.shape;
  d.j.target = host;
  int a = host->dom(f), b = host->cod(f);
  d.j.omap = {{0, a}, {1, b}};
  d.j.mmap = {{0, host->ids.at(a)}, {1, host->ids.at(b)}, {2, f}, {3, g}};
  return d;
}

Diagram empty_diagram(const CatPtr& host) {
  Diagram d;
  d.shape = discrete_shape(0);
  d.j.source = d.shape;
  d.j.target = host;
  return d;
}

}  // namespace catmod
