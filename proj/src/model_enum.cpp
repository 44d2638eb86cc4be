#include "catmod/model_enum.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "catmod/errors.hpp"
#include "catmod/eval.hpp"

namespace catmod {

namespace {

std::vector<std::vector<int>> all_tuples(const std::vector<int>& radices) {
  std::vector<std::vector<int>> out;
  std::vector<int> t(radices.size(), 0);
  size_t n = 1;
  for (int r : radices) n *= static_cast<size_t>(r);
  if (std::any_of(radices.begin(), radices.end(), [](int r) { return r == 0; })) return {};
  out.reserve(n);
  while (true) {
    out.push_back(t);
    size_t i = t.size();
    while (i > 0) {
      if (++t[i - 1] < radices[i - 1]) break;
      t[i - 1] = 0;
      --i;
    }
    if (i == 0) break;
  }
  return out;
}

}  // namespace

std::vector<int> structure_encoding(const FinStructure& m) {
  std::vector<int> enc;
  for (const auto& s : m.sig.sorts) enc.push_back(static_cast<int>(m.carrier(s).size()));
  for (const auto& [cn, cs] : m.sig.constants) enc.push_back(m.consts.at(cn));
  for (const auto& [fn, prof] : m.sig.functions) {
    std::vector<int> radices;
    for (const auto& a : prof.args) radices.push_back(static_cast<int>(m.carrier(a).size()));
    for (const auto& t : all_tuples(radices)) {
      auto v = m.apply(fn, t);
      enc.push_back(v ? *v : -1);
    }
  }
  for (const auto& [rn, profile] : m.sig.relations) {
    std::vector<int> radices;
    for (const auto& a : profile) radices.push_back(static_cast<int>(m.carrier(a).size()));
    for (const auto& t : all_tuples(radices)) enc.push_back(m.holds(rn, t) ? 1 : 0);
  }
  return enc;
}

namespace {

FinStructure apply_permutation(const FinStructure& m,
                               const std::map<std::string, std::vector<int>>& perm) {
  FinStructure r;
  r.sig = m.sig;
  r.carriers = m.carriers;
  auto p = [&](const std::string& s, int e) { return perm.at(s)[e]; };
  for (const auto& [cn, cs] : m.sig.constants) r.consts[cn] = p(cs, m.consts.at(cn));
  for (const auto& [fn, table] : m.funcs) {
    const auto& prof = m.sig.functions.at(fn);
    for (const auto& [args, val] : table) {
      std::vector<int> im(args.size());
      for (size_t i = 0; i < args.size(); ++i) im[i] = p(prof.args[i], args[i]);
      r.funcs[fn][im] = p(prof.result, val);
    }
  }
  for (const auto& [rn, tuples] : m.rels) {
    const auto& profile = m.sig.relations.at(rn);
    for (const auto& t : tuples) {
      std::vector<int> im(t.size());
      for (size_t i = 0; i < t.size(); ++i) im[i] = p(profile[i], t[i]);
      r.rels[rn].insert(im);
    }
  }
  return r;
}

}  // namespace

FinStructure canonical_form(const FinStructure& m) {
  // Iterate the product of per-sort permutations.
  std::vector<std::string> sorts = m.sig.sorts;
  std::map<std::string, std::vector<int>> perm;
  for (const auto& s : sorts) {
    perm[s].resize(m.carrier(s).size());
    std::iota(perm[s].begin(), perm[s].end(), 0);
  }
  FinStructure best = apply_permutation(m, perm);
  std::vector<int> best_enc = structure_encoding(best);
  std::function<void(size_t)> rec = [&](size_t si) {
    if (si == sorts.size()) {
      FinStructure cand = apply_permutation(m, perm);
      std::vector<int> enc = structure_encoding(cand);
      if (enc < best_enc) {
        best = std::move(cand);
        best_enc = std::move(enc);
      }
      return;
    }
    auto& p = perm[sorts[si]];
    std::sort(p.begin(), p.end());
    do {
      rec(si + 1);
    } while (std::next_permutation(p.begin(), p.end()));
    std::sort(p.begin(), p.end());
  };
  rec(0);
  return best;
}

namespace {

// ---- three-valued evaluation over partial interpretation tables ----------

enum class TV { False, True, Unknown };

struct PartialInterp {
  const Signature* sig;
  std::map<std::string, int> sizes;
  std::map<std::string, int> consts;  // -2 unassigned
  struct FnTable {
    std::vector<std::string> args;
    std::string result;
    std::vector<int> radices;
    std::vector<int> cells;  // -2 unassigned, -1 undefined, else value
  };
  struct RelTable {
    std::vector<std::string> args;
    std::vector<int> radices;
    std::vector<signed char> cells;  // -1 unknown, 0, 1
  };
  std::map<std::string, FnTable> fns;
  std::map<std::string, RelTable> rls;

  static size_t index(const std::vector<int>& radices, const std::vector<int>& t) {
    size_t ix = 0;
    for (size_t i = 0; i < t.size(); ++i) ix = ix * static_cast<size_t>(radices[i]) + t[i];
    return ix;
  }
};

struct TermRes {
  enum class K { Value, Undefined, Unknown } k;
  int v = 0;
};

TermRes eval3_term(const PartialInterp& p, const Term& t, std::map<std::string, int>& env) {
  switch (t.kind) {
    case Term::Kind::Var:
      return {TermRes::K::Value, env.at(t.name)};
    case Term::Kind::Const: {
      int c = p.consts.at(t.name);
      if (c == -2) return {TermRes::K::Unknown, 0};
      return {TermRes::K::Value, c};
    }
    case Term::Kind::App: {
      const auto& f = p.fns.at(t.name);
      std::vector<int> args(t.args.size());
      bool unknown = false;
      for (size_t i = 0; i < t.args.size(); ++i) {
        TermRes r = eval3_term(p, t.args[i], env);
        if (r.k == TermRes::K::Undefined) return {TermRes::K::Undefined, 0};
        if (r.k == TermRes::K::Unknown) unknown = true;
        else args[i] = r.v;
      }
      if (unknown) return {TermRes::K::Unknown, 0};
      int cell = f.cells[PartialInterp::index(f.radices, args)];
      if (cell == -2) return {TermRes::K::Unknown, 0};
      if (cell == -1) return {TermRes::K::Undefined, 0};
      return {TermRes::K::Value, cell};
    }
  }
  return {TermRes::K::Unknown, 0};
}

TV tv_not(TV a) {
  if (a == TV::Unknown) return TV::Unknown;
  return a == TV::True ? TV::False : TV::True;
}

TV eval3(const PartialInterp& p, const Formula& f, std::map<std::string, int>& env) {
  switch (f.kind) {
    case Formula::Kind::Atom: {
      const auto& r = p.rls.at(f.name);
      std::vector<int> args(f.terms.size());
      bool unknown = false;
      for (size_t i = 0; i < f.terms.size(); ++i) {
        TermRes tr = eval3_term(p, f.terms[i], env);
        if (tr.k == TermRes::K::Undefined) return TV::False;
        if (tr.k == TermRes::K::Unknown) unknown = true;
        else args[i] = tr.v;
      }
      if (unknown) return TV::Unknown;
      signed char c = r.cells[PartialInterp::index(r.radices, args)];
      if (c < 0) return TV::Unknown;
      return c ? TV::True : TV::False;
    }
    case Formula::Kind::Eq: {
      TermRes l = eval3_term(p, f.terms[0], env);
      if (l.k == TermRes::K::Undefined) return TV::False;
      TermRes r = eval3_term(p, f.terms[1], env);
      if (r.k == TermRes::K::Undefined) return TV::False;
      if (l.k == TermRes::K::Unknown || r.k == TermRes::K::Unknown) return TV::Unknown;
      return l.v == r.v ? TV::True : TV::False;
    }
    case Formula::Kind::Not:
      return tv_not(eval3(p, f.sub[0], env));
    case Formula::Kind::And: {
      TV a = eval3(p, f.sub[0], env);
      if (a == TV::False) return TV::False;
      TV b = eval3(p, f.sub[1], env);
      if (b == TV::False) return TV::False;
      if (a == TV::Unknown || b == TV::Unknown) return TV::Unknown;
      return TV::True;
    }
    case Formula::Kind::Or: {
      TV a = eval3(p, f.sub[0], env);
      if (a == TV::True) return TV::True;
      TV b = eval3(p, f.sub[1], env);
      if (b == TV::True) return TV::True;
      if (a == TV::Unknown || b == TV::Unknown) return TV::Unknown;
      return TV::False;
    }
    case Formula::Kind::Implies: {
      TV a = eval3(p, f.sub[0], env);
      if (a == TV::False) return TV::True;
      TV b = eval3(p, f.sub[1], env);
      if (b == TV::True) return TV::True;
      if (a == TV::Unknown || b == TV::Unknown) return TV::Unknown;
      return TV::False;
    }
    case Formula::Kind::Iff: {
      TV a = eval3(p, f.sub[0], env);
      TV b = eval3(p, f.sub[1], env);
      if (a == TV::Unknown || b == TV::Unknown) return TV::Unknown;
      return a == b ? TV::True : TV::False;
    }
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      bool uni = f.kind == Formula::Kind::Forall;
      int size = p.sizes.at(f.var_sort);
      bool any_unknown = false;
      auto saved = env.count(f.name) ? std::optional<int>(env[f.name]) : std::nullopt;
      TV result = uni ? TV::True : TV::False;
      for (int e = 0; e < size; ++e) {
        env[f.name] = e;
        TV v = eval3(p, f.sub[0], env);
        if (uni && v == TV::False) {
          result = TV::False;
          break;
        }
        if (!uni && v == TV::True) {
          result = TV::True;
          break;
        }
        if (v == TV::Unknown) any_unknown = true;
      }
      if (saved)
        env[f.name] = *saved;
      else
        env.erase(f.name);
      if (result != (uni ? TV::True : TV::False)) return result;
      return any_unknown ? TV::Unknown : result;
    }
  }
  return TV::Unknown;
}

bool is_universal_sentence(const Formula& f) {
  const Formula* g = &f;
  while (g->kind == Formula::Kind::Forall) g = &g->sub[0];
  return g->quantifier_depth() == 0;
}

// cell descriptors drive the DFS order
struct Cell {
  enum class Kind { Const, Fn, Rel } kind;
  std::string name;
  size_t index = 0;  // table offset for Fn/Rel
};

}  // namespace

std::vector<FinStructure> enumerate_models(const Theory& t, int max_size, int size_cap) {
  if (max_size < 1 || max_size > size_cap)
    fail("BoundsExceeded", "max_size must be between 1 and " + std::to_string(size_cap));
  auto sig_errs = t.sig.validate();
  if (!sig_errs.empty()) fail("SortError", "invalid signature: " + sig_errs.front());

  std::vector<const Formula*> universal;
  for (const auto& s : t.sentences)
    if (is_universal_sentence(s)) universal.push_back(&s);

  std::vector<FinStructure> out;
  std::set<std::vector<int>> seen;

  // carrier size vectors, each sort 1..max_size, lexicographic
  std::vector<std::string> sorts = t.sig.sorts;
  std::vector<int> sizes(sorts.size(), 1);
  auto advance_sizes = [&]() {
    size_t i = sizes.size();
    while (i > 0) {
      if (++sizes[i - 1] <= max_size) return true;
      sizes[i - 1] = 1;
      --i;
    }
    return false;
  };

  if (sorts.empty()) return out;
  do {
    PartialInterp p;
    p.sig = &t.sig;
    for (size_t i = 0; i < sorts.size(); ++i) p.sizes[sorts[i]] = sizes[i];
    std::vector<Cell> cells;
    for (const auto& [cn, cs] : t.sig.constants) {
      p.consts[cn] = -2;
      cells.push_back({Cell::Kind::Const, cn, 0});
    }
    for (const auto& [fn, prof] : t.sig.functions) {
      PartialInterp::FnTable ft;
      ft.args = prof.args;
      ft.result = prof.result;
      size_t n = 1;
      for (const auto& a : prof.args) {
        ft.radices.push_back(p.sizes[a]);
        n *= static_cast<size_t>(p.sizes[a]);
      }
      ft.cells.assign(n, -2);
      p.fns[fn] = std::move(ft);
      for (size_t i = 0; i < n; ++i) cells.push_back({Cell::Kind::Fn, fn, i});
    }
    for (const auto& [rn, profile] : t.sig.relations) {
      PartialInterp::RelTable rt;
      rt.args = profile;
      size_t n = 1;
      for (const auto& a : profile) {
        rt.radices.push_back(p.sizes[a]);
        n *= static_cast<size_t>(p.sizes[a]);
      }
      rt.cells.assign(n, -1);
      p.rls[rn] = std::move(rt);
      for (size_t i = 0; i < n; ++i) cells.push_back({Cell::Kind::Rel, rn, i});
    }

    auto prune = [&]() {
      std::map<std::string, int> env;
      for (const auto* s : universal)
        if (eval3(p, *s, env) == TV::False) return true;
      return false;
    };

    auto complete = [&]() {
      FinStructure m;
      m.sig = t.sig;
      for (size_t i = 0; i < sorts.size(); ++i)
        for (int e = 0; e < sizes[i]; ++e) m.carriers[sorts[i]].push_back(e);
      for (const auto& [cn, v] : p.consts) m.consts[cn] = v;
      for (const auto& [fn, ft] : p.fns) {
        m.funcs[fn];
        std::vector<std::vector<int>> tuples = all_tuples(ft.radices);
        for (size_t i = 0; i < tuples.size(); ++i)
          if (ft.cells[i] >= 0) m.funcs[fn][tuples[i]] = ft.cells[i];
      }
      for (const auto& [rn, rt] : p.rls) {
        m.rels[rn];
        std::vector<std::vector<int>> tuples = all_tuples(rt.radices);
        for (size_t i = 0; i < tuples.size(); ++i)
          if (rt.cells[i] == 1) m.rels[rn].insert(tuples[i]);
      }
      if (!satisfies(m, t)) return;
      FinStructure canon = canonical_form(m);
      auto enc = structure_encoding(canon);
      if (seen.insert(enc).second) out.push_back(std::move(canon));
    };

    std::function<void(size_t)> dfs = [&](size_t ci) {
      if (ci == cells.size()) {
        complete();
        return;
      }
      const Cell& c = cells[ci];
      switch (c.kind) {
        case Cell::Kind::Const: {
          int k = p.sizes[t.sig.constants.at(c.name)];
          for (int v = 0; v < k; ++v) {
            p.consts[c.name] = v;
            if (!prune()) dfs(ci + 1);
          }
          p.consts[c.name] = -2;
          break;
        }
        case Cell::Kind::Fn: {
          auto& ft = p.fns[c.name];
          int k = p.sizes[ft.result];
          bool partial = t.sig.functions.at(c.name).partial;
          if (partial) {
            ft.cells[c.index] = -1;
            if (!prune()) dfs(ci + 1);
          }
          for (int v = 0; v < k; ++v) {
            ft.cells[c.index] = v;
            if (!prune()) dfs(ci + 1);
          }
          ft.cells[c.index] = -2;
          break;
        }
        case Cell::Kind::Rel: {
          auto& rt = p.rls[c.name];
          for (signed char v = 0; v <= 1; ++v) {
            rt.cells[c.index] = v;
            if (!prune()) dfs(ci + 1);
          }
          rt.cells[c.index] = -1;
          break;
        }
      }
    };
    dfs(0);
  } while (advance_sizes());

  return out;
}

}  // namespace catmod
