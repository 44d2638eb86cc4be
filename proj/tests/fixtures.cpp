#include "fixtures.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "catmod/cat_structure.hpp"
#include "catmod/eval.hpp"
#include "catmod/limits.hpp"
#include "catmod/model_enum.hpp"
#include "catmod/parser.hpp"

namespace fixtures {

using namespace catmod;

namespace {

// Fill the composites that identities force, then sanity-check.
CatPtr finish(FinCategory c) {
  for (const auto& m : c.morphisms) {
    c.comp[{m.id, c.ids.at(m.dom)}] = m.id;
    c.comp[{c.ids.at(m.cod), m.id}] = m.id;
  }
  auto violations = validate_category(c);
  if (!violations.empty())
    throw std::logic_error("fixture category invalid: " + violations.front().detail);
  return share(std::move(c));
}

CatPtr poset_category(int n, const std::function<bool(int, int)>& leq) {
  FinCategory c;
  for (int i = 0; i < n; ++i) c.objects.push_back(i);
  int next = 0;
  std::map<std::pair<int, int>, int> arrow;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (leq(i, j)) {
        arrow[{i, j}] = next;
        c.morphisms.push_back({next, i, j});
        ++next;
      }
  for (int i = 0; i < n; ++i) c.ids[i] = arrow.at({i, i});
  for (const auto& [ij, f] : arrow)
    for (const auto& [jk, g] : arrow)
      if (ij.second == jk.first) c.comp[{g, f}] = arrow.at({ij.first, jk.second});
  auto violations = validate_category(c);
  if (!violations.empty()) throw std::logic_error("poset fixture invalid");
  return share(std::move(c));
}

}  // namespace

CatPtr empty_category() { return share(FinCategory{}); }

CatPtr terminal_category() {
  FinCategory c;
  c.objects = {0};
  c.morphisms = {{0, 0, 0}};
  c.ids[0] = 0;
  c.comp[{0, 0}] = 0;
  return share(std::move(c));
}

CatPtr discrete_category(int n) {
  FinCategory c;
  for (int i = 0; i < n; ++i) {
    c.objects.push_back(i);
    c.morphisms.push_back({i, i, i});
    c.ids[i] = i;
    c.comp[{i, i}] = i;
  }
  return share(std::move(c));
}

CatPtr arrow_category() {
  FinCategory c;
  c.objects = {0, 1};
  c.morphisms = {{0, 0, 0}, {1, 1, 1}, {2, 0, 1}};
  c.ids = {{0, 0}, {1, 1}};
  return finish(std::move(c));
}

int arrow_morphism_id() { return 2; }

CatPtr parallel_pair_category() {
  FinCategory c;
  c.objects = {0, 1};
  c.morphisms = {{0, 0, 0}, {1, 1, 1}, {2, 0, 1}, {3, 0, 1}};
  c.ids = {{0, 0}, {1, 1}};
  return finish(std::move(c));
}

CatPtr composable_chain() {
  FinCategory c;
  c.objects = {0, 1, 2};
  c.morphisms = {{0, 0, 0}, {1, 1, 1}, {2, 2, 2}, {3, 0, 1}, {4, 1, 2}, {5, 0, 2}};
  c.ids = {{0, 0}, {1, 1}, {2, 2}};
  c.comp[{4, 3}] = 5;
  return finish(std::move(c));
}

CatPtr span_category() {
  FinCategory c;
  c.objects = {0, 1, 2};
  c.morphisms = {{0, 0, 0}, {1, 1, 1}, {2, 2, 2}, {3, 2, 0}, {4, 2, 1}};
  c.ids = {{0, 0}, {1, 1}, {2, 2}};
  return finish(std::move(c));
}

CatPtr cospan_category() {
  FinCategory c;
  c.objects = {0, 1, 2};
  c.morphisms = {{0, 0, 0}, {1, 1, 1}, {2, 2, 2}, {3, 0, 2}, {4, 1, 2}};
  c.ids = {{0, 0}, {1, 1}, {2, 2}};
  return finish(std::move(c));
}

CatPtr walking_iso() {
  FinCategory c;
  c.objects = {0, 1};
  c.morphisms = {{0, 0, 0}, {1, 1, 1}, {2, 0, 1}, {3, 1, 0}};
  c.ids = {{0, 0}, {1, 1}};
  c.comp[{3, 2}] = 0;
  c.comp[{2, 3}] = 1;
  return finish(std::move(c));
}

CatPtr triangle_groupoid() {
  FinCategory c;
  c.objects = {0, 1, 2};
  std::map<std::pair<int, int>, int> arrow;
  int next = 0;
  for (int i = 0; i < 3; ++i) {
    arrow[{i, i}] = next;
    c.morphisms.push_back({next, i, i});
    c.ids[i] = next;
    ++next;
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) {
        arrow[{i, j}] = next;
        c.morphisms.push_back({next, i, j});
        ++next;
      }
  for (const auto& [ij, f] : arrow)
    for (const auto& [jk, g] : arrow)
      if (ij.second == jk.first) c.comp[{g, f}] = arrow.at({ij.first, jk.second});
  auto violations = validate_category(c);
  if (!violations.empty()) throw std::logic_error("groupoid fixture invalid");
  return share(std::move(c));
}

CatPtr group_category(const FinStructure& group) {
  FinCategory c;
  c.objects = {0};
  const auto& carrier = group.carrier("g");
  for (int e : carrier) c.morphisms.push_back({e, 0, 0});
  c.ids[0] = group.consts.at("zero");
  for (int a : carrier)
    for (int b : carrier) c.comp[{a, b}] = *group.apply("add", {a, b});
  auto violations = validate_category(c);
  if (!violations.empty()) throw std::logic_error("group fixture invalid");
  return share(std::move(c));
}

CatPtr cyclic_group_category(int n) { return group_category(cyclic_group(n)); }

CatPtr klein_four_category() {
  return group_category(direct_product(cyclic_group(2), cyclic_group(2)));
}

CatPtr idempotent_monoid_category() {
  FinCategory c;
  c.objects = {0};
  c.morphisms = {{0, 0, 0}, {1, 0, 0}};
  c.ids[0] = 0;
  c.comp[{1, 1}] = 1;
  return finish(std::move(c));
}

CatPtr chain_poset(int n) {
  return poset_category(n, [](int i, int j) { return i <= j; });
}

CatPtr diamond_poset() {
  // 0 = bottom, 1 and 2 incomparable, 3 = top
  return poset_category(4, [](int i, int j) {
    if (i == j || i == 0 || j == 3) return true;
    return false;
  });
}

CatPtr divisor_poset_12() {
  static const int divisors[6] = {1, 2, 3, 4, 6, 12};
  return poset_category(6, [](int i, int j) { return divisors[j] % divisors[i] == 0; });
}

CatPtr sets_category(const std::vector<int>& sizes) {
  FinCategory c;
  for (int i = 0; i < static_cast<int>(sizes.size()); ++i) c.objects.push_back(i);
  // morphisms: all functions [sizes[a]] -> [sizes[b]], encoded by value table
  struct Rec {
    int dom, cod;
    std::vector<int> table;
  };
  std::vector<Rec> recs;
  std::map<std::pair<std::pair<int, int>, std::vector<int>>, int> index;
  for (int a = 0; a < static_cast<int>(sizes.size()); ++a)
    for (int b = 0; b < static_cast<int>(sizes.size()); ++b) {
      std::vector<int> table(sizes[a], 0);
      while (true) {
        int id = static_cast<int>(recs.size());
        recs.push_back({a, b, table});
        index[{{a, b}, table}] = id;
        c.morphisms.push_back({id, a, b});
        int k = sizes[a] - 1;
        while (k >= 0) {
          if (++table[k] < sizes[b]) break;
          table[k] = 0;
          --k;
        }
        if (k < 0) break;
        if (sizes[a] == 0) break;
      }
    }
  for (int a = 0; a < static_cast<int>(sizes.size()); ++a) {
    std::vector<int> identity(sizes[a]);
    for (int k = 0; k < sizes[a]; ++k) identity[k] = k;
    c.ids[a] = index.at({{a, a}, identity});
  }
  for (int f = 0; f < static_cast<int>(recs.size()); ++f)
    for (int g = 0; g < static_cast<int>(recs.size()); ++g) {
      if (recs[f].cod != recs[g].dom) continue;
      std::vector<int> composite(recs[f].table.size());
      for (size_t k = 0; k < composite.size(); ++k) composite[k] = recs[g].table[recs[f].table[k]];
      c.comp[{g, f}] = index.at({{recs[f].dom, recs[g].cod}, composite});
    }
  auto violations = validate_category(c);
  if (!violations.empty()) throw std::logic_error("sets fixture invalid");
  return share(std::move(c));
}

CatPtr two_labeled_doubletons() { return sets_category({2, 2}); }

CatPtr indiscrete_z2_groupoid() {
  FinCategory c;
  c.objects = {0, 1};
  auto id_of = [](int i, int j, int g) { return (i * 2 + j) * 2 + g; };
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int g = 0; g < 2; ++g) c.morphisms.push_back({id_of(i, j, g), i, j});
  c.ids = {{0, id_of(0, 0, 0)}, {1, id_of(1, 1, 0)}};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int g = 0; g < 2; ++g)
          for (int h = 0; h < 2; ++h)
            c.comp[{id_of(j, k, h), id_of(i, j, g)}] = id_of(i, k, (g + h) % 2);
  auto violations = validate_category(c);
  if (!violations.empty()) throw std::logic_error("groupoid fixture invalid");
  return share(std::move(c));
}

AbFixture ab_fixture() {
  ModelCategory bundle = abelian_bundle(4);
  Signature sig = group_signature();
  Formula two_torsion = parse_formula("forall x:g. add(x,x) = zero", sig);
  int zero_obj = -1, z2_obj = -1, v4_obj = -1;
  for (int i = 0; i < static_cast<int>(bundle.models.size()); ++i) {
    size_t n = bundle.models[i].carrier("g").size();
    if (n == 1) zero_obj = i;
    if (n == 2) z2_obj = i;
    if (n == 4 && eval_formula(bundle.models[i], two_torsion)) v4_obj = i;
  }
  if (zero_obj < 0 || z2_obj < 0 || v4_obj < 0)
    throw std::logic_error("abelian bundle does not contain the expected models");
  AbFixture out;
  out.cat = share(full_subcategory(*bundle.cat, {zero_obj, z2_obj, v4_obj}));
  out.zero_obj = zero_obj;
  out.z2_obj = z2_obj;
  out.v4_obj = v4_obj;
  auto lim = limit_of(*out.cat, discrete_pair_diagram(out.cat, z2_obj, z2_obj));
  if (!lim || lim->apex != v4_obj)
    throw std::logic_error("V4 is not the square of Z/2 in the fixture");
  out.v4_as_square = {lim->apex, lim->legs.at(0), lim->legs.at(1)};
  return out;
}

ModelCategory set_bundle(int n) { return build_model_category(set_n_theory(n), n); }

ModelCategory abelian_bundle(int max_size) {
  return build_model_category(abelian_theory(), max_size);
}

ModelCategory unary_pred_bundle(int max_size, bool strong) {
  Theory t;
  t.sig.sorts = {"s"};
  t.sig.relations["P"] = {"s"};
  return build_model_category(t, max_size, strong);
}

const std::vector<NamedCategory>& fixture_corpus() {
  static const std::vector<NamedCategory> corpus = [] {
    std::vector<NamedCategory> out;
    auto add = [&](const std::string& name, CatPtr c) {
      if (c->morphisms.size() > 40)
        throw std::logic_error("fixture " + name + " exceeds the morphism cap");
      out.push_back({name, std::move(c)});
    };
    add("empty", empty_category());
    add("terminal", terminal_category());
    add("discrete2", discrete_category(2));
    add("discrete3", discrete_category(3));
    add("arrow", arrow_category());
    add("parallel_pair", parallel_pair_category());
    add("composable_chain", composable_chain());
    add("span", span_category());
    add("cospan", cospan_category());
    add("walking_iso", walking_iso());
    add("triangle_groupoid", triangle_groupoid());
    add("group_z2", cyclic_group_category(2));
    add("group_z3", cyclic_group_category(3));
    add("group_z4", cyclic_group_category(4));
    add("group_v4", klein_four_category());
    add("idempotent_monoid", idempotent_monoid_category());
    add("chain3", chain_poset(3));
    add("chain4", chain_poset(4));
    add("diamond_poset", diamond_poset());
    add("divisor_poset_12", divisor_poset_12());
    add("sets_12", sets_category({1, 2}));
    add("two_labeled_doubletons", two_labeled_doubletons());
    add("sets_122", sets_category({1, 2, 2}));
    add("indiscrete_z2", indiscrete_z2_groupoid());
    add("walking_iso+terminal", share(disjoint_union(*walking_iso(), *terminal_category())));
    add("walking_iso+walking_iso", share(disjoint_union(*walking_iso(), *walking_iso())));
    add("z2+z2", share(disjoint_union(*cyclic_group_category(2), *cyclic_group_category(2))));
    add("triangle+arrow", share(disjoint_union(*triangle_groupoid(), *arrow_category())));
    add("ab_0_z2_v4", ab_fixture().cat);
    add("set1_bundle", set_bundle(1).cat);
    add("set2_bundle", set_bundle(2).cat);
    add("abelian3_bundle", abelian_bundle(3).cat);
    add("unary_pred2_bundle", unary_pred_bundle(2, false).cat);
    return out;
  }();
  return corpus;
}

std::vector<NamedCategory> skeleton_pairs_corpus() {
  std::vector<NamedCategory> out;
  out.push_back({"walking_iso", walking_iso()});
  out.push_back({"triangle_groupoid", triangle_groupoid()});
  out.push_back({"two_labeled_doubletons", two_labeled_doubletons()});
  out.push_back({"sets_122", sets_category({1, 2, 2})});
  out.push_back({"indiscrete_z2", indiscrete_z2_groupoid()});
  out.push_back({"walking_iso+terminal",
                 share(disjoint_union(*walking_iso(), *terminal_category()))});
  out.push_back({"walking_iso+walking_iso",
                 share(disjoint_union(*walking_iso(), *walking_iso()))});
  out.push_back({"triangle+z2",
                 share(disjoint_union(*triangle_groupoid(), *cyclic_group_category(2)))});
  out.push_back({"labeled+arrow",
                 share(disjoint_union(*two_labeled_doubletons(), *arrow_category()))});
  out.push_back({"walking_iso+chain3", share(disjoint_union(*walking_iso(), *chain_poset(3)))});
  return out;
}

FinStructure lcat_structure_of(const FinCategory& c) { return structure_from_category(c); }

FinCategory break_dom_cod(const FinCategory& c) {
  // point a non-identity composite at a morphism with the wrong endpoints
  FinCategory broken = c;
  broken.comp[{4, 3}] = 4;  // meant for composable_chain: dom(4) != dom(3)
  return broken;
}

FinCategory break_associativity(const FinCategory& c) {
  // meant for a cyclic group category of order >= 3
  FinCategory broken = c;
  broken.comp[{1, 2}] = 1;
  return broken;
}

FinCategory break_identity(const FinCategory& c) {
  // meant for a one-object category: declare a non-identity as the identity
  FinCategory broken = c;
  broken.ids[0] = 1;
  return broken;
}

}  // namespace fixtures
