#include "catmod/hom_search.hpp"

#include <algorithm>
#include <functional>

#include "catmod/errors.hpp"

namespace catmod {

namespace {

struct Searcher {
  const FinStructure& a;
  const FinStructure& b;
  bool strong;
  bool bijective;

  // flattened assignment order: sorts in declared order, carrier order within
  std::vector<std::pair<std::string, int>> slots;
  std::map<std::string, std::map<int, int>> assigned;   // partial map
  std::map<std::string, std::set<int>> used;            // for bijective mode

  std::function<bool(const std::map<std::string, std::map<int, int>>&)> emit;

  Searcher(const FinStructure& a_, const FinStructure& b_, bool strong_, bool bij)
      : a(a_), b(b_), strong(strong_), bijective(bij) {
    for (const auto& s : a.sig.sorts)
      for (int e : a.carrier(s)) slots.emplace_back(s, e);
  }

  bool is_assigned(const std::string& sort, int e) const {
    auto it = assigned.find(sort);
    return it != assigned.end() && it->second.count(e);
  }

  int image(const std::string& sort, int e) const { return assigned.at(sort).at(e); }

  // Checks every constraint whose participants are all assigned and which
  // involves the just-assigned element (sort, e).
  bool consistent(const std::string& sort, int e) {
    for (const auto& [cn, cs] : a.sig.constants) {
      if (cs != sort || a.consts.at(cn) != e) continue;
      if (image(cs, e) != b.consts.at(cn)) return false;
    }
    for (const auto& [fn, table] : a.funcs) {
      const auto& prof = a.sig.functions.at(fn);
      for (const auto& [args, val] : table) {
        bool involves = (prof.result == sort && val == e);
        for (size_t i = 0; i < args.size() && !involves; ++i)
          involves = prof.args[i] == sort && args[i] == e;
        if (!involves) continue;
        bool ready = is_assigned(prof.result, val);
        for (size_t i = 0; i < args.size() && ready; ++i) ready = is_assigned(prof.args[i], args[i]);
        if (!ready) continue;
        std::vector<int> im(args.size());
        for (size_t i = 0; i < args.size(); ++i) im[i] = image(prof.args[i], args[i]);
        auto bv = b.apply(fn, im);
        if (!bv || *bv != image(prof.result, val)) return false;
      }
    }
    for (const auto& [rn, profile] : a.sig.relations) {
      bool touches = std::find(profile.begin(), profile.end(), sort) != profile.end();
      if (!touches) continue;
      // all tuples over assigned elements that mention (sort, e)
      std::vector<std::vector<int>> doms;
      for (const auto& s : profile) {
        std::vector<int> d;
        for (int x : a.carrier(s))
          if (is_assigned(s, x)) d.push_back(x);
        doms.push_back(std::move(d));
      }
      std::vector<int> t(profile.size());
      std::function<bool(size_t, bool)> rec = [&](size_t i, bool mentions) -> bool {
        if (i == profile.size()) {
          if (!mentions) return true;
          bool in_a = a.holds(rn, t);
          if (!in_a && !strong) return true;
          std::vector<int> im(t.size());
          for (size_t k = 0; k < t.size(); ++k) im[k] = image(profile[k], t[k]);
          bool in_b = b.holds(rn, im);
          if (in_a && !in_b) return false;
          if (strong && !in_a && in_b) return false;
          return true;
        }
        for (int x : doms[i]) {
          t[i] = x;
          if (!rec(i + 1, mentions || (profile[i] == sort && x == e))) return false;
        }
        return true;
      };
      if (!rec(0, false)) return false;
    }
    return true;
  }

  bool run(size_t pos) {
    if (pos == slots.size()) return emit(assigned);
    const auto& [sort, e] = slots[pos];
    for (int v : b.carrier(sort)) {
      if (bijective && used[sort].count(v)) continue;
      assigned[sort][e] = v;
      if (bijective) used[sort].insert(v);
      bool keep = true;
      if (consistent(sort, e)) keep = run(pos + 1);
      assigned[sort].erase(e);
      if (bijective) used[sort].erase(v);
      if (!keep) return false;
    }
    return true;
  }
};

bool reflects_function_definedness(const Homomorphism& h) {
  const FinStructure& a = *h.source;
  const FinStructure& b = *h.target;
  for (const auto& [fn, prof] : a.sig.functions) {
    std::vector<const std::vector<int>*> doms;
    for (const auto& s : prof.args) doms.push_back(&a.carrier(s));
    std::vector<int> t(prof.args.size());
    std::function<bool(size_t)> rec = [&](size_t i) -> bool {
      if (i == t.size()) {
        std::vector<int> im(t.size());
        for (size_t k = 0; k < t.size(); ++k) im[k] = h.maps.at(prof.args[k]).at(t[k]);
        return a.apply(fn, t).has_value() == b.apply(fn, im).has_value();
      }
      for (int x : *doms[i]) {
        t[i] = x;
        if (!rec(i + 1)) return false;
      }
      return true;
    };
    if (!rec(0)) return false;
  }
  return true;
}

}  // namespace

std::vector<Homomorphism> enumerate_homomorphisms(const StructPtr& a, const StructPtr& b,
                                                  bool strong) {
  if (a->sig != b->sig) fail("SignatureMismatch", "homomorphism between different signatures");
  std::vector<Homomorphism> out;
  Searcher s(*a, *b, strong, false);
  s.emit = [&](const std::map<std::string, std::map<int, int>>& maps) {
    Homomorphism h;
    h.source = a;
    h.target = b;
    h.maps = maps;
    for (const auto& sort : a->sig.sorts)
      h.maps.try_emplace(sort);  // explicit empty map for empty carriers
    h.strong = strong;
    out.push_back(std::move(h));
    return true;
  };
  s.run(0);
  return out;
}

std::optional<Homomorphism> are_isomorphic(const StructPtr& a, const StructPtr& b) {
  if (a->sig != b->sig) fail("SignatureMismatch", "isomorphism between different signatures");
  for (const auto& s : a->sig.sorts)
    if (a->carrier(s).size() != b->carrier(s).size()) return std::nullopt;
  std::optional<Homomorphism> found;
  Searcher s(*a, *b, /*strong=*/true, /*bijective=*/true);
  s.emit = [&](const std::map<std::string, std::map<int, int>>& maps) {
    Homomorphism h;
    h.source = a;
    h.target = b;
    h.maps = maps;
    for (const auto& sort : a->sig.sorts) h.maps.try_emplace(sort);
    h.strong = true;
    if (!reflects_function_definedness(h)) return true;  // keep searching
    found = std::move(h);
    return false;
  };
  s.run(0);
  return found;
}

}  // namespace catmod
