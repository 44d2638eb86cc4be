#include "catmod/enumerate.hpp"

#include <map>
#include <random>

#include "catmod/errors.hpp"

namespace catmod {

namespace {
constexpr int kDepthCap = 4;
constexpr int kSizeCap = 12;
}  // namespace

// Counting, streaming and unranking all walk the same production order:
//   atoms (relations in name order) | equalities (per sort) | ~ |
//   & | "|" | -> | <-> (left size ascending) | forall (per sort) | exists.
// Terms: variables in scope order, constants, then functions in name order
// with argument sizes ascending lexicographically.
struct SentenceEnumerator::Impl {
  Signature sig;
  EnumLimits lims;

  std::vector<std::string> rel_names;
  std::vector<std::string> const_names;
  std::vector<std::string> fn_names;

  // memoized counts; keys flatten (kind, n, d|sort, extra, scope counts)
  std::map<std::vector<int>, std::uint64_t> memo;

  std::uint64_t total = 0;
  bool total_done = false;

  explicit Impl(Signature s, EnumLimits l) : sig(std::move(s)), lims(l) {
    for (const auto& [n, v] : sig.relations) rel_names.push_back(n);
    for (const auto& [n, v] : sig.constants) const_names.push_back(n);
    for (const auto& [n, v] : sig.functions) fn_names.push_back(n);
  }

  int sort_index(const std::string& s) const {
    for (size_t i = 0; i < sig.sorts.size(); ++i)
      if (sig.sorts[i] == s) return static_cast<int>(i);
    return -1;
  }

  std::vector<int> scope_counts(const std::vector<int>& scope) const {
    std::vector<int> c(sig.sorts.size(), 0);
    for (int s : scope) c[s]++;
    return c;
  }

  // ---- counting ----------------------------------------------------------

  std::uint64_t count_term(int n, int sort, const std::vector<int>& scope) {
    if (n <= 0) return 0;
    std::vector<int> key{0, n, sort};
    auto sc = scope_counts(scope);
    key.insert(key.end(), sc.begin(), sc.end());
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::uint64_t c = 0;
    if (n == 1) {
      c += sc[sort];
      for (const auto& cn : const_names)
        if (sort_index(sig.constants.at(cn)) == sort) ++c;
    }
    for (size_t fi = 0; fi < fn_names.size(); ++fi) {
      const auto& prof = sig.functions.at(fn_names[fi]);
      if (sort_index(prof.result) != sort) continue;
      c += count_args(n - 1, static_cast<int>(fi), 0, scope);
    }
    memo[key] = c;
    return c;
  }

  const std::vector<std::string>& fn_args(int fi) const { return sig.functions.at(fn_names[fi]).args; }

  std::uint64_t count_args(int n, int fi, int pos, const std::vector<int>& scope) {
    const auto& args = fn_args(fi);
    if (pos == static_cast<int>(args.size())) return n == 0 ? 1 : 0;
    if (n <= 0) return 0;
    std::vector<int> key{1, n, fi, pos};
    auto sc = scope_counts(scope);
    key.insert(key.end(), sc.begin(), sc.end());
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::uint64_t c = 0;
    int sort = sort_index(args[pos]);
    for (int i = 1; i <= n; ++i) {
      std::uint64_t lhs = count_term(i, sort, scope);
      if (!lhs) continue;
      c += lhs * count_args(n - i, fi, pos + 1, scope);
    }
    memo[key] = c;
    return c;
  }

  std::uint64_t count_rel_args(int n, int ri, int pos, const std::vector<int>& scope) {
    const auto& args = sig.relations.at(rel_names[ri]);
    if (pos == static_cast<int>(args.size())) return n == 0 ? 1 : 0;
    if (n <= 0) return 0;
    std::vector<int> key{2, n, ri, pos};
    auto sc = scope_counts(scope);
    key.insert(key.end(), sc.begin(), sc.end());
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::uint64_t c = 0;
    int sort = sort_index(args[pos]);
    for (int i = 1; i <= n; ++i) {
      std::uint64_t lhs = count_term(i, sort, scope);
      if (!lhs) continue;
      c += lhs * count_rel_args(n - i, ri, pos + 1, scope);
    }
    memo[key] = c;
    return c;
  }

  std::uint64_t count_formula(int n, int d, const std::vector<int>& scope) {
    if (n <= 0) return 0;
    std::vector<int> key{3, n, d};
    auto sc = scope_counts(scope);
    key.insert(key.end(), sc.begin(), sc.end());
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::uint64_t c = 0;
    for (size_t ri = 0; ri < rel_names.size(); ++ri)
      c += count_rel_args(n - 1, static_cast<int>(ri), 0, scope);
    if (!lims.homotopic) {
      for (size_t s = 0; s < sig.sorts.size(); ++s)
        for (int i = 1; i <= n - 2; ++i)
          c += count_term(i, static_cast<int>(s), scope) *
               count_term(n - 1 - i, static_cast<int>(s), scope);
    }
    c += count_formula(n - 1, d, scope);  // ~
    for (int op = 0; op < 4; ++op)
      for (int i = 1; i <= n - 2; ++i) {
        std::uint64_t l = count_formula(i, d, scope);
        if (!l) continue;
        c += l * count_formula(n - 1 - i, d, scope);
      }
    if (d > 0) {
      for (int q = 0; q < 2; ++q)
        for (size_t s = 0; s < sig.sorts.size(); ++s) {
          auto inner = scope;
          inner.push_back(static_cast<int>(s));
          c += count_formula(n - 1, d - 1, inner);
        }
    }
    memo[key] = c;
    return c;
  }

  // ---- streaming ---------------------------------------------------------

  using Yield = std::function<bool(Formula&&)>;
  using TermYield = std::function<bool(Term&&)>;

  bool gen_term(int n, int sort, const std::vector<int>& scope, const TermYield& fn) {
    if (n <= 0) return true;
    if (n == 1) {
      for (size_t i = 0; i < scope.size(); ++i)
        if (scope[i] == sort && !fn(Term::var("x" + std::to_string(i)))) return false;
      for (const auto& cn : const_names)
        if (sort_index(sig.constants.at(cn)) == sort && !fn(Term::constant(cn))) return false;
    }
    for (size_t fi = 0; fi < fn_names.size(); ++fi) {
      const auto& prof = sig.functions.at(fn_names[fi]);
      if (sort_index(prof.result) != sort) continue;
      std::vector<Term> acc;
      if (!gen_args(n - 1, prof.args, 0, scope, acc, [&](std::vector<Term>&& args) {
            return fn(Term::app(fn_names[fi], std::move(args)));
          }))
        return false;
    }
    return true;
  }

  bool gen_args(int n, const std::vector<std::string>& profile, int pos,
                const std::vector<int>& scope, std::vector<Term>& acc,
                const std::function<bool(std::vector<Term>&&)>& fn) {
    if (pos == static_cast<int>(profile.size())) {
      if (n != 0) return true;
      auto copy = acc;
      return fn(std::move(copy));
    }
    if (n <= 0) return true;
    int sort = sort_index(profile[pos]);
    for (int i = 1; i <= n; ++i) {
      bool keep = gen_term(i, sort, scope, [&](Term&& t) {
        acc.push_back(std::move(t));
        bool k = gen_args(n - i, profile, pos + 1, scope, acc, fn);
        acc.pop_back();
        return k;
      });
      if (!keep) return false;
    }
    return true;
  }

  bool gen_formula(int n, int d, const std::vector<int>& scope, const Yield& fn) {
    if (n <= 0) return true;
    for (const auto& rn : rel_names) {
      std::vector<Term> acc;
      if (!gen_args(n - 1, sig.relations.at(rn), 0, scope, acc, [&](std::vector<Term>&& args) {
            return fn(Formula::atom(rn, std::move(args)));
          }))
        return false;
    }
    if (!lims.homotopic) {
      for (size_t s = 0; s < sig.sorts.size(); ++s)
        for (int i = 1; i <= n - 2; ++i) {
          bool keep = gen_term(i, static_cast<int>(s), scope, [&](Term&& lhs) {
            return gen_term(n - 1 - i, static_cast<int>(s), scope, [&](Term&& rhs) {
              auto l = lhs;
              return fn(Formula::eq(std::move(l), std::move(rhs)));
            });
          });
          if (!keep) return false;
        }
    }
    if (!gen_formula(n - 1, d, scope, [&](Formula&& g) { return fn(Formula::neg(std::move(g))); }))
      return false;
    static constexpr Formula::Kind kOps[4] = {Formula::Kind::And, Formula::Kind::Or,
                                              Formula::Kind::Implies, Formula::Kind::Iff};
    for (auto op : kOps)
      for (int i = 1; i <= n - 2; ++i) {
        bool keep = gen_formula(i, d, scope, [&](Formula&& l) {
          return gen_formula(n - 1 - i, d, scope, [&](Formula&& r) {
            auto lc = l;
            return fn(Formula::binary(op, std::move(lc), std::move(r)));
          });
        });
        if (!keep) return false;
      }
    if (d > 0) {
      static constexpr Formula::Kind kQs[2] = {Formula::Kind::Forall, Formula::Kind::Exists};
      for (auto q : kQs)
        for (size_t s = 0; s < sig.sorts.size(); ++s) {
          auto inner = scope;
          inner.push_back(static_cast<int>(s));
          std::string var = "x" + std::to_string(scope.size());
          bool keep = gen_formula(n - 1, d - 1, inner, [&](Formula&& body) {
            return fn(Formula::quant(q, var, sig.sorts[s], std::move(body)));
          });
          if (!keep) return false;
        }
    }
    return true;
  }

  // ---- unranking ---------------------------------------------------------

  Term unrank_term(int n, int sort, const std::vector<int>& scope, std::uint64_t idx) {
    if (n == 1) {
      for (size_t i = 0; i < scope.size(); ++i)
        if (scope[i] == sort) {
          if (idx == 0) return Term::var("x" + std::to_string(i));
          --idx;
        }
      for (const auto& cn : const_names)
        if (sort_index(sig.constants.at(cn)) == sort) {
          if (idx == 0) return Term::constant(cn);
          --idx;
        }
    }
    for (size_t fi = 0; fi < fn_names.size(); ++fi) {
      const auto& prof = sig.functions.at(fn_names[fi]);
      if (sort_index(prof.result) != sort) continue;
      std::uint64_t c = count_args(n - 1, static_cast<int>(fi), 0, scope);
      if (idx < c) {
        std::vector<Term> args;
        unrank_args(n - 1, static_cast<int>(fi), 0, scope, idx, args);
        return Term::app(fn_names[fi], std::move(args));
      }
      idx -= c;
    }
    fail("BoundsExceeded", "term unrank out of range");
  }

  void unrank_args(int n, int fi, int pos, const std::vector<int>& scope, std::uint64_t idx,
                   std::vector<Term>& out) {
    const auto& args = fn_args(fi);
    if (pos == static_cast<int>(args.size())) return;
    int sort = sort_index(args[pos]);
    for (int i = 1; i <= n; ++i) {
      std::uint64_t lhs = count_term(i, sort, scope);
      if (!lhs) continue;
      std::uint64_t rest = count_args(n - i, fi, pos + 1, scope);
      if (idx < lhs * rest) {
        out.push_back(unrank_term(i, sort, scope, idx / rest));
        unrank_args(n - i, fi, pos + 1, scope, idx % rest, out);
        return;
      }
      idx -= lhs * rest;
    }
    fail("BoundsExceeded", "args unrank out of range");
  }

  void unrank_rel_args(int n, int ri, int pos, const std::vector<int>& scope, std::uint64_t idx,
                       std::vector<Term>& out) {
    const auto& args = sig.relations.at(rel_names[ri]);
    if (pos == static_cast<int>(args.size())) return;
    int sort = sort_index(args[pos]);
    for (int i = 1; i <= n; ++i) {
      std::uint64_t lhs = count_term(i, sort, scope);
      if (!lhs) continue;
      std::uint64_t rest = count_rel_args(n - i, ri, pos + 1, scope);
      if (idx < lhs * rest) {
        out.push_back(unrank_term(i, sort, scope, idx / rest));
        unrank_rel_args(n - i, ri, pos + 1, scope, idx % rest, out);
        return;
      }
      idx -= lhs * rest;
    }
    fail("BoundsExceeded", "relation args unrank out of range");
  }

  Formula unrank_formula(int n, int d, const std::vector<int>& scope, std::uint64_t idx) {
    for (size_t ri = 0; ri < rel_names.size(); ++ri) {
      std::uint64_t c = count_rel_args(n - 1, static_cast<int>(ri), 0, scope);
      if (idx < c) {
        std::vector<Term> args;
        unrank_rel_args(n - 1, static_cast<int>(ri), 0, scope, idx, args);
        return Formula::atom(rel_names[ri], std::move(args));
      }
      idx -= c;
    }
    if (!lims.homotopic) {
      for (size_t s = 0; s < sig.sorts.size(); ++s)
        for (int i = 1; i <= n - 2; ++i) {
          std::uint64_t l = count_term(i, static_cast<int>(s), scope);
          if (!l) continue;
          std::uint64_t r = count_term(n - 1 - i, static_cast<int>(s), scope);
          if (idx < l * r)
            return Formula::eq(unrank_term(i, static_cast<int>(s), scope, idx / r),
                               unrank_term(n - 1 - i, static_cast<int>(s), scope, idx % r));
          idx -= l * r;
        }
    }
    {
      std::uint64_t c = count_formula(n - 1, d, scope);
      if (idx < c) return Formula::neg(unrank_formula(n - 1, d, scope, idx));
      idx -= c;
    }
    static constexpr Formula::Kind kOps[4] = {Formula::Kind::And, Formula::Kind::Or,
                                              Formula::Kind::Implies, Formula::Kind::Iff};
    for (auto op : kOps)
      for (int i = 1; i <= n - 2; ++i) {
        std::uint64_t l = count_formula(i, d, scope);
        if (!l) continue;
        std::uint64_t r = count_formula(n - 1 - i, d, scope);
        if (idx < l * r)
          return Formula::binary(op, unrank_formula(i, d, scope, idx / r),
                                 unrank_formula(n - 1 - i, d, scope, idx % r));
        idx -= l * r;
      }
    if (d > 0) {
      static constexpr Formula::Kind kQs[2] = {Formula::Kind::Forall, Formula::Kind::Exists};
      for (auto q : kQs)
        for (size_t s = 0; s < sig.sorts.size(); ++s) {
          auto inner = scope;
          inner.push_back(static_cast<int>(s));
          std::uint64_t c = count_formula(n - 1, d - 1, inner);
          if (idx < c)
            return Formula::quant(q, "x" + std::to_string(scope.size()), sig.sorts[s],
                                  unrank_formula(n - 1, d - 1, inner, idx));
          idx -= c;
        }
    }
    fail("BoundsExceeded", "formula unrank out of range");
  }
};

SentenceEnumerator::SentenceEnumerator(Signature sig, EnumLimits lims) {
  if (lims.max_depth < 0 || lims.max_depth > kDepthCap)
    fail("BoundsExceeded", "max_depth must be between 0 and " + std::to_string(kDepthCap));
  if (lims.max_size < 0 || lims.max_size > kSizeCap)
    fail("BoundsExceeded", "max_size must be between 0 and " + std::to_string(kSizeCap));
  auto errs = sig.validate();
  if (!errs.empty()) fail("SortError", "invalid signature: " + errs.front());
  impl_ = std::make_shared<Impl>(std::move(sig), lims);
}

std::uint64_t SentenceEnumerator::count() {
  if (!impl_->total_done) {
    std::uint64_t t = 0;
    for (int n = 1; n <= impl_->lims.max_size; ++n)
      t += impl_->count_formula(n, impl_->lims.max_depth, {});
    impl_->total = t;
    impl_->total_done = true;
  }
  return impl_->total;
}

void SentenceEnumerator::for_each(const std::function<bool(const Formula&)>& yield) {
  for (int n = 1; n <= impl_->lims.max_size; ++n) {
    bool keep = impl_->gen_formula(n, impl_->lims.max_depth, {},
                                   [&](Formula&& f) { return yield(f); });
    if (!keep) return;
  }
}

Formula SentenceEnumerator::unrank(std::uint64_t index) {
  for (int n = 1; n <= impl_->lims.max_size; ++n) {
    std::uint64_t c = impl_->count_formula(n, impl_->lims.max_depth, {});
    if (index < c) return impl_->unrank_formula(n, impl_->lims.max_depth, {}, index);
    index -= c;
  }
  fail("BoundsExceeded", "sentence index out of range");
}

std::vector<Formula> sample_sentences(const Signature& sig, const EnumLimits& lims,
                                      std::uint64_t budget, std::uint64_t seed, bool* exhaustive) {
  SentenceEnumerator en(sig, lims);
  std::uint64_t total = en.count();
  std::vector<Formula> out;
  if (total <= budget) {
    if (exhaustive) *exhaustive = true;
    out.reserve(total);
    en.for_each([&](const Formula& f) {
      out.push_back(f);
      return true;
    });
    return out;
  }
  if (exhaustive) *exhaustive = false;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(0, total - 1);
  out.reserve(budget);
  for (std::uint64_t i = 0; i < budget; ++i) out.push_back(en.unrank(dist(rng)));
  return out;
}

}  // namespace catmod
