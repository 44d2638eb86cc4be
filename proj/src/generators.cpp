#include "catmod/generators.hpp"

#include <algorithm>
#include <functional>

namespace catmod {

std::vector<std::pair<int, int>> parallel_pairs(const FinCategory& c) {
  std::vector<std::pair<int, int>> out;
  for (int a : c.objects)
    for (int b : c.objects) {
      auto hom = c.hom(a, b);
      for (size_t i = 0; i < hom.size(); ++i)
        for (size_t j = i + 1; j < hom.size(); ++j) out.push_back({hom[i], hom[j]});
    }
  return out;
}

namespace {
bool family_covers(const FinCategory& c, const std::vector<int>& family) {
  for (int a : c.objects) {
    bool reached = false;
    for (int i : family)
      if (!c.hom(i, a).empty()) {
        reached = true;
        break;
      }
    if (!reached) return false;
  }
  return true;
}
}  // namespace

bool separates(const FinCategory& c, const std::vector<int>& family) {
  for (const auto& [f, g] : parallel_pairs(c)) {
    int a = c.dom(f);
    bool separated = false;
    for (int i : family) {
      for (int arrow : c.hom(i, a)) {
        auto fa = c.compose(f, arrow);
        auto ga = c.compose(g, arrow);
        if (fa && ga && *fa != *ga) {
          separated = true;
          break;
        }
      }
      if (separated) break;
    }
    if (!separated) return false;
  }
  return true;
}

bool is_generator(const FinCategory& c, int candidate) {
  std::vector<int> family{candidate};
  return family_covers(c, family) && separates(c, family);
}

std::vector<int> find_generators(const FinCategory& c) {
  std::vector<int> out;
  std::vector<int> objs = c.objects;
  std::sort(objs.begin(), objs.end());
  for (int o : objs)
    if (is_generator(c, o)) out.push_back(o);
  return out;
}

std::vector<GeneratingFamily> minimal_generating_families(const FinCategory& c,
                                                          size_t max_families) {
  std::vector<GeneratingFamily> out;
  std::vector<int> objs = c.objects;
  std::sort(objs.begin(), objs.end());
  std::vector<std::vector<int>> found;
  // subsets by size then lexicographic
  for (size_t k = 0; k <= objs.size() && out.size() < max_families; ++k) {
    std::vector<int> pick;
    std::function<void(size_t)> rec = [&](size_t start) {
      if (out.size() >= max_families) return;
      if (pick.size() == k) {
        for (const auto& smaller : found) {
          if (std::includes(pick.begin(), pick.end(), smaller.begin(), smaller.end())) return;
        }
        if (!family_covers(c, pick) || !separates(c, pick)) return;
        found.push_back(pick);
        GeneratingFamily fam;
        fam.members = pick;
        fam.locally_unique = true;
        for (int a : c.objects) {
          int sources = 0;
          for (int i : pick)
            if (!c.hom(i, a).empty()) ++sources;
          if (sources != 1) fam.locally_unique = false;
        }
        out.push_back(std::move(fam));
        return;
      }
      for (size_t i = start; i < objs.size(); ++i) {
        pick.push_back(objs[i]);
        rec(i + 1);
        pick.pop_back();
      }
    };
    rec(0);
  }
  return out;
}

}  // namespace catmod
