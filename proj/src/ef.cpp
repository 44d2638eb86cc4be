#include "catmod/ef.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <tuple>

#include "catmod/errors.hpp"

namespace catmod {

FinStructure relationalize(const FinStructure& m) {
  FinStructure r;
  r.sig.sorts = m.sig.sorts;
  r.sig.constants = m.sig.constants;
  r.sig.relations = m.sig.relations;
  r.carriers = m.carriers;
  r.consts = m.consts;
  r.rels = m.rels;
  for (const auto& [fn, prof] : m.sig.functions) {
    auto profile = prof.args;
    profile.push_back(prof.result);
    r.sig.relations[fn] = profile;
    auto it = m.funcs.find(fn);
    if (it == m.funcs.end()) continue;
    for (const auto& [args, val] : it->second) {
      auto t = args;
      t.push_back(val);
      r.rels[fn].insert(t);
    }
  }
  return r;
}

namespace {

// Pebble positions: (sort, a, b) triples, kept sorted for memoization.
using Position = std::vector<std::tuple<std::string, int, int>>;

struct Game {
  const FinStructure& a;
  const FinStructure& b;
  std::map<std::pair<Position, int>, bool> memo;

  // The pebbled pairs plus constant interpretations form a partial
  // isomorphism: the map is well-defined, injective, and relation atoms
  // agree on both sides.
  bool partial_iso(const Position& pos) const {
    std::map<std::pair<std::string, int>, int> fwd, bwd;
    auto add = [&](const std::string& s, int x, int y) {
      auto f = fwd.find({s, x});
      if (f != fwd.end() && f->second != y) return false;
      auto g = bwd.find({s, y});
      if (g != bwd.end() && g->second != x) return false;
      fwd[{s, x}] = y;
      bwd[{s, y}] = x;
      return true;
    };
    for (const auto& [cn, cs] : a.sig.constants)
      if (!add(cs, a.consts.at(cn), b.consts.at(cn))) return false;
    for (const auto& [s, x, y] : pos)
      if (!add(s, x, y)) return false;
    for (const auto& [rn, profile] : a.sig.relations) {
      std::vector<std::vector<std::pair<int, int>>> doms(profile.size());
      for (size_t i = 0; i < profile.size(); ++i)
        for (const auto& [k, y] : fwd)
          if (k.first == profile[i]) doms[i].push_back({k.second, y});
      std::vector<int> ta(profile.size()), tb(profile.size());
      std::function<bool(size_t)> rec = [&](size_t i) -> bool {
        if (i == profile.size()) return a.holds(rn, ta) == b.holds(rn, tb);
        for (const auto& [x, y] : doms[i]) {
          ta[i] = x;
          tb[i] = y;
          if (!rec(i + 1)) return false;
        }
        return true;
      };
      if (!rec(0)) return false;
    }
    return true;
  }

  bool duplicator_wins(Position pos, int rounds) {
    std::sort(pos.begin(), pos.end());
    if (!partial_iso(pos)) return false;
    if (rounds == 0) return true;
    auto key = std::make_pair(pos, rounds);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    bool win = true;
    for (const auto& s : a.sig.sorts) {
      // Spoiler picks in A, Duplicator answers in B.
      for (int x : a.carrier(s)) {
        bool answered = false;
        for (int y : b.carrier(s)) {
          auto next = pos;
          next.emplace_back(s, x, y);
          if (duplicator_wins(std::move(next), rounds - 1)) {
            answered = true;
            break;
          }
        }
        if (!answered) {
          win = false;
          break;
        }
      }
      if (!win) break;
      // Spoiler picks in B.
      for (int y : b.carrier(s)) {
        bool answered = false;
        for (int x : a.carrier(s)) {
          auto next = pos;
          next.emplace_back(s, x, y);
          if (duplicator_wins(std::move(next), rounds - 1)) {
            answered = true;
            break;
          }
        }
        if (!answered) {
          win = false;
          break;
        }
      }
      if (!win) break;
    }
    memo[key] = win;
    return win;
  }
};

}  // namespace

bool ef_equivalent(const FinStructure& a, const FinStructure& b, int rounds, int rounds_cap) {
  if (a.sig != b.sig) fail("SignatureMismatch", "EF game between different signatures");
  if (rounds < 0 || rounds > rounds_cap)
    fail("BoundsExceeded", "EF rounds must be between 0 and " + std::to_string(rounds_cap));
  FinStructure ra = relationalize(a);
  FinStructure rb = relationalize(b);
  Game g{ra, rb, {}};
  return g.duplicator_wins({}, rounds);
}

}  // namespace catmod
