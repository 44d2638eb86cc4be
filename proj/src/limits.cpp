#include "catmod/limits.hpp"

#include <functional>

namespace catmod {

std::vector<Cone> all_cones(const FinCategory& c, const Diagram& d) {
  std::vector<Cone> out;
  const auto& shape_objs = d.shape->objects;
  for (int apex : c.objects) {
    Cone cone;
    cone.apex = apex;
    std::function<void(size_t)> rec = [&](size_t i) {
      if (i == shape_objs.size()) {
        out.push_back(cone);
        return;
      }
      int a = shape_objs[i];
      for (int leg : c.hom(apex, d.j.obj(a))) {
        cone.legs[a] = leg;
        bool ok = true;
        // check all shape morphisms whose endpoints are assigned
        for (const auto& sm : d.shape->morphisms) {
          if (!cone.legs.count(sm.dom) || !cone.legs.count(sm.cod)) continue;
          auto lhs = c.compose(d.j.mor(sm.id), cone.legs.at(sm.dom));
          if (!lhs || *lhs != cone.legs.at(sm.cod)) {
            ok = false;
            break;
          }
        }
        if (ok) rec(i + 1);
        cone.legs.erase(a);
      }
    };
    rec(0);
  }
  return out;
}

bool is_limit_cone(const FinCategory& c, const Diagram& d, const Cone& candidate) {
  for (const Cone& other : all_cones(c, d)) {
    int mediating = 0;
    for (int u : c.hom(other.apex, candidate.apex)) {
      bool commutes = true;
      for (const auto& [a, leg] : candidate.legs) {
        auto v = c.compose(leg, u);
        if (!v || *v != other.legs.at(a)) {
          commutes = false;
          break;
        }
      }
      if (commutes) ++mediating;
    }
    if (mediating != 1) return false;
  }
  return true;
}

std::optional<Cone> limit_of(const FinCategory& c, const Diagram& d, bool colimit) {
  if (colimit) {
    CatPtr op_host = share(opposite(c));
    CatPtr op_shape = share(opposite(*d.shape));
    Diagram od;
    od.shape = op_shape;
    od.j.source = op_shape;
    od.j.target = op_host;
    od.j.omap = d.j.omap;
    od.j.mmap = d.j.mmap;
    return limit_of(*op_host, od, false);
  }
  for (const Cone& cone : all_cones(c, d))
    if (is_limit_cone(c, d, cone)) return cone;
  return std::nullopt;
}

}  // namespace catmod
