// Acceptance suite: one pass/fail line per criterion, timed against the
// stated budget. Exit code = number of failing criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "catmod/abcheck.hpp"
#include "catmod/cat_structure.hpp"
#include "catmod/ef.hpp"
#include "catmod/enumerate.hpp"
#include "catmod/eval.hpp"
#include "catmod/generators.hpp"
#include "catmod/hom_search.hpp"
#include "catmod/homotopic.hpp"
#include "catmod/limits.hpp"
#include "catmod/model_enum.hpp"
#include "catmod/parser.hpp"
#include "catmod/skeleton.hpp"
#include "catmod/term_algebra.hpp"
#include "catmod/ultra.hpp"
#include "fixtures.hpp"

using namespace catmod;

namespace {

struct Check {
  int id;
  std::string name;
  long budget_ms;
  std::function<bool(std::ostream&)> run;
};

FinStructure bare_set(int n) {
  FinStructure m;
  m.sig.sorts = {"s"};
  for (int i = 0; i < n; ++i) m.carriers["s"].push_back(i);
  return m;
}

FinStructure abelian_product(const std::vector<int>& factors) {
  FinStructure g = cyclic_group(factors.at(0));
  for (size_t i = 1; i < factors.size(); ++i) g = direct_product(g, cyclic_group(factors[i]));
  return g;
}

// ---- criterion 1: hom-set counts of the fixed-size set categories ---------

bool run_homset_counts(std::ostream& note) {
  for (int n : {1, 2, 3}) {
    ModelCategory mc = build_model_category(set_n_theory(n), n);
    size_t expect = 1;
    for (int k = 0; k < n; ++k) expect *= static_cast<size_t>(n);
    if (mc.models.size() != 1 || mc.cat->morphisms.size() != expect) {
      note << "n=" << n << ": " << mc.models.size() << " objects, "
           << mc.cat->morphisms.size() << " endomorphisms (want 1, " << expect << ")";
      return false;
    }
  }
  note << "endomorphism counts 1, 4, 27";
  return true;
}

// ---- criterion 2: the category axiom validator -----------------------------

bool run_validator(std::ostream& note) {
  size_t accepted = 0;
  for (const auto& [name, cat] : fixtures::fixture_corpus()) {
    if (!validate_category(*cat).empty()) {
      note << "fixture " << name << " rejected";
      return false;
    }
    ++accepted;
  }
  if (accepted < 25) {
    note << "only " << accepted << " fixtures";
    return false;
  }
  auto cites = [](const std::vector<CatViolation>& vs, int axiom) {
    for (const auto& v : vs)
      if (v.axiom == axiom) return true;
    return false;
  };
  if (!cites(validate_category(fixtures::break_dom_cod(*fixtures::composable_chain())), 1)) {
    note << "dom/cod mutant not cited as axiom 1";
    return false;
  }
  if (!cites(validate_category(fixtures::break_associativity(*fixtures::cyclic_group_category(3))),
             2)) {
    note << "associativity mutant not cited as axiom 2";
    return false;
  }
  if (!cites(validate_category(fixtures::break_identity(*fixtures::cyclic_group_category(2))), 3)) {
    note << "identity mutant not cited as axiom 3";
    return false;
  }
  note << accepted << " fixtures accepted, 3 mutation classes rejected";
  return true;
}

// ---- criterion 3: quasi-composition equals composition ---------------------

bool run_qc_composition(std::ostream& note) {
  size_t triples = 0;
  for (const auto& [name, cat] : fixtures::fixture_corpus()) {
    IsoGraph g = build_isograph(cat);
    for (const auto& f : cat->morphisms)
      for (const auto& gm : cat->morphisms) {
        if (gm.dom != f.cod) continue;
        for (const auto& h : cat->morphisms) {
          if (h.dom != f.dom || h.cod != gm.cod) continue;
          ++triples;
          bool qc = qc_holds(*cat, g, f.id, gm.id, h.id);
          bool comp = *cat->compose(gm.id, f.id) == h.id;
          if (qc != comp) {
            note << "mismatch in " << name << " at (" << f.id << "," << gm.id << "," << h.id
                 << ")";
            return false;
          }
        }
      }
  }
  note << triples << " matching triples, zero mismatches";
  return true;
}

// ---- criterion 4: homotopic agreement with the skeleton ---------------------

bool run_homotopic_agreement(std::ostream& note) {
  auto pairs = fixtures::skeleton_pairs_corpus();
  if (pairs.size() < 10) {
    note << "only " << pairs.size() << " pairs";
    return false;
  }
  std::uint64_t exhaustive_checked = 0;
  for (const auto& [name, cat] : pairs) {
    CatPtr sk = skeleton_of(cat).skeleton;
    AgreementReport low = agreement_test(cat, sk, 2, 9, 1u << 20, 0);
    if (!low.exhaustive || !low.mismatches.empty()) {
      note << name << ": " << low.mismatches.size() << " disagreements at depth 2";
      return false;
    }
    exhaustive_checked += low.checked;
    AgreementReport sampled = agreement_test(cat, sk, 3, 12, 1000, 20260808);
    if (sampled.checked != 1000 || !sampled.mismatches.empty()) {
      note << name << ": " << sampled.mismatches.size() << " disagreements at depth 3";
      return false;
    }
  }
  note << pairs.size() << " skeleton pairs, " << exhaustive_checked
       << " exhaustive + 10000 sampled sentences agree";
  return true;
}

// ---- criterion 5: quasi-limits equal limit existence ------------------------

bool run_qlim(std::ostream& note) {
  size_t diagrams = 0;
  for (const auto& [name, cat] : fixtures::fixture_corpus()) {
    IsoGraph g = build_isograph(cat);
    auto check = [&](const Diagram& d) {
      ++diagrams;
      bool q = qlim_holds(*cat, g, d);
      bool l = limit_of(*cat, d).has_value();
      if (q != l) {
        note << name << ": quasi-limit " << q << " vs limit " << l;
        return false;
      }
      return true;
    };
    if (!check(empty_diagram(cat))) return false;
    for (int a : cat->objects)
      for (int b : cat->objects)
        if (!check(discrete_pair_diagram(cat, a, b))) return false;
    for (int a : cat->objects)
      for (int b : cat->objects) {
        auto hom = cat->hom(a, b);
        for (size_t i = 0; i < hom.size(); ++i)
          for (size_t j = i + 1; j < hom.size(); ++j)
            if (!check(parallel_pair_diagram(cat, hom[i], hom[j]))) return false;
      }
  }
  note << diagrams << " diagrams across the corpus";
  return true;
}

// ---- criterion 6: Los over curated and enumerated sentences ----------------

bool run_los(std::ostream& note) {
  Signature sig = group_signature();
  std::vector<Formula> sentences;
  for (const char* text : {
           "forall x:g. add(x,zero) = x",
           "forall x:g. add(x,neg(x)) = zero",
           "forall x:g. forall y:g. add(x,y) = add(y,x)",
           "forall x:g. forall y:g. forall z:g. add(add(x,y),z) = add(x,add(y,z))",
           "exists x:g. ~(x = zero)",
           "forall x:g. add(x,x) = zero",
           "exists x:g. (add(x,x) = zero & ~(x = zero))",
           "forall x:g. exists y:g. add(y,y) = x",
           "exists x:g. exists y:g. ~(x = y)",
           "forall x:g. exists y:g. add(x,y) = zero",
           "exists x:g. add(add(x,x),x) = zero",
           "forall x:g. add(add(x,x),x) = zero",
           "exists x:g. forall y:g. add(x,y) = y",
           "forall x:g. forall y:g. (add(x,x) = add(y,y) -> x = y)",
           "exists x:g. exists y:g. (~(x = y) & add(x,y) = zero)",
           "forall x:g. neg(neg(x)) = x",
           "forall x:g. (add(x,x) = zero -> (x = zero | exists y:g. ~(y = x)))",
           "exists x:g. neg(x) = x",
           "forall x:g. exists y:g. exists z:g. add(y,z) = x",
           "forall x:g. (neg(x) = x -> add(x,x) = zero)",
       })
    sentences.push_back(parse_formula(text, sig));
  size_t curated = sentences.size();
  {
    SentenceEnumerator en(sig, {3, 9, false});
    en.for_each([&](const Formula& f) {
      sentences.push_back(f);
      return sentences.size() < curated + 500;
    });
  }

  auto models = enumerate_models(abelian_theory(), 4);
  std::vector<StructPtr> pool;
  for (const auto& m : models) pool.push_back(share(m));
  std::mt19937_64 rng(6);
  size_t checks = 0;
  for (int xsize : {2, 3}) {
    std::vector<int> x;
    for (int i = 0; i < xsize; ++i) x.push_back(i);
    for (int family_trial = 0; family_trial < 6; ++family_trial) {
      std::vector<StructPtr> family;
      for (int i = 0; i < xsize; ++i) family.push_back(pool[rng() % pool.size()]);
      for (const auto& u : enumerate_ultrafilters(x)) {
        ReducedProduct rp = reduced_product(family, u);
        for (const auto& s : sentences) {
          ++checks;
          bool product_truth = eval_formula(rp.quotient, s);
          std::set<int> truth;
          for (size_t i = 0; i < family.size(); ++i)
            if (eval_formula(*family[i], s)) truth.insert(x[i]);
          if (product_truth != (u.members.count(truth) > 0)) {
            note << "transfer fails for " << print_formula(s, sig);
            return false;
          }
        }
        // principal collapse via the constructed canonical isomorphism
        int at = *filter_core(u).begin();
        Homomorphism iso;
        iso.source = family[static_cast<size_t>(at)];
        iso.target = share(rp.quotient);
        iso.strong = true;
        for (int e : iso.source->carrier("g")) {
          std::vector<int> fam(x.size());
          for (size_t i = 0; i < x.size(); ++i)
            fam[i] = x[i] == at ? e : family[i]->carrier("g").front();
          iso.maps["g"][e] = rp.class_of("g", fam);
        }
        if (!validate_homomorphism(iso).empty() || !injective(iso) || !surjective(iso)) {
          note << "principal collapse isomorphism failed";
          return false;
        }
      }
    }
  }
  note << checks << " transfer checks over " << sentences.size() << " sentences";
  return true;
}

// ---- criterion 7: coequalizer universal property ----------------------------

bool run_coequalizers(std::ostream& note) {
  std::mt19937_64 rng(7);
  size_t verified = 0;
  bool non_strong_seen = false;

  auto drive = [&](const ModelCategory& mc, int pairs) -> bool {
    std::vector<StructPtr> all_targets;
    for (const auto& m : mc.models) all_targets.push_back(share(m));
    for (int trial = 0; trial < pairs; ++trial) {
      const Homomorphism& f = mc.homs[rng() % mc.homs.size()];
      std::vector<int> partners;
      for (int i = 0; i < static_cast<int>(mc.homs.size()); ++i)
        if (*mc.homs[i].source == *f.source && *mc.homs[i].target == *f.target)
          partners.push_back(i);
      const Homomorphism& g = mc.homs[partners[rng() % partners.size()]];
      CoequalizerResult co = coequalizer(f, g);
      std::vector<StructPtr> targets;
      for (const auto& t : all_targets)
        if (t->total_size() <= f.target->total_size()) targets.push_back(t);
      auto problems = coequalizer_universal_report(f, g, co, targets);
      if (!problems.empty()) {
        note << "universal property failed: " << problems.front();
        return false;
      }
      Homomorphism strong_probe = co.projection;
      strong_probe.strong = true;
      if (!validate_homomorphism(strong_probe).empty()) non_strong_seen = true;
      ++verified;
    }
    return true;
  };

  if (!drive(fixtures::abelian_bundle(4), 25)) return false;
  if (!drive(fixtures::unary_pred_bundle(3, false), 25)) return false;

  // the specific identity/negation pair on Z/3
  auto z3 = share(cyclic_group(3));
  Homomorphism id = identity_hom(z3);
  Homomorphism neg;
  neg.source = neg.target = z3;
  neg.maps["g"] = {{0, 0}, {1, 2}, {2, 1}};
  CoequalizerResult co = coequalizer(id, neg);
  if (co.quotient.carrier("g").size() != 1) {
    note << "identity/negation on Z/3 quotient has " << co.quotient.carrier("g").size()
         << " elements";
    return false;
  }
  if (!non_strong_seen) {
    note << "no non-strong projection witnessed";
    return false;
  }
  note << verified << " seeded pairs verified, non-strong projection witnessed";
  return true;
}

// ---- criterion 8: term algebra and theta family -----------------------------

bool run_term_theta(std::ostream& note) {
  // 20 (signature, structure) fixtures with finite term closures
  size_t fixtures_run = 0;
  std::mt19937_64 rng(8);
  for (int consts = 0; consts <= 3; ++consts)
    for (int size = 1; size <= 3; ++size) {
      for (int rel = 0; rel <= 1; ++rel) {
        if (fixtures_run >= 20) break;
        Signature sig;
        sig.sorts = {"s"};
        for (int c = 0; c < consts; ++c) sig.constants["c" + std::to_string(c)] = "s";
        if (rel) sig.relations["P"] = {"s"};
        FinStructure m;
        m.sig = sig;
        for (int i = 0; i < size; ++i) m.carriers["s"].push_back(i);
        for (int c = 0; c < consts; ++c)
          m.consts["c" + std::to_string(c)] = static_cast<int>(rng() % size);
        if (rel) {
          m.rels["P"] = {};
          for (int i = 0; i < size; ++i)
            if (rng() % 2) m.rels["P"].insert({i});
        }
        TermAlgebra t = term_algebra(sig);
        auto homs = enumerate_homomorphisms(share(t.algebra), share(m));
        if (homs.size() != m.carrier("s").size()) {
          note << "hom count " << homs.size() << " differs from carrier " << m.carrier("s").size();
          return false;
        }
        // the bijection is evaluation at the variable
        std::set<int> images;
        for (const auto& h : homs) images.insert(h.maps.at("s").at(0));
        if (images.size() != homs.size()) {
          note << "evaluation at x is not injective";
          return false;
        }
        ++fixtures_run;
      }
    }

  // theta family over the one-unary-predicate signature
  Signature psig;
  psig.sorts = {"s"};
  psig.relations["P"] = {"s"};
  auto theta = theta_family(psig);
  if (theta.size() != 2) {
    note << "theta family has " << theta.size() << " members";
    return false;
  }
  for (int n = 1; n <= 3; ++n)
    for (int p = 0; p <= n; ++p) {
      StructPtr m = share(unary_pred_structure(n, p));
      std::map<int, int> hits;
      size_t total = 0;
      for (const auto& th : theta)
        for (const auto& h : enumerate_homomorphisms(share(th), m, true)) {
          hits[h.maps.at("s").at(0)]++;
          ++total;
        }
      if (total != m->carrier("s").size()) {
        note << "strong homs from theta: " << total << " vs carrier " << n;
        return false;
      }
      for (int e : m->carrier("s"))
        if (hits[e] != 1) {
          note << "element " << e << " hit " << hits[e] << " times";
          return false;
        }
    }
  note << fixtures_run << " term-algebra fixtures, theta partitions verified";
  return true;
}

// ---- criterion 9: ultrapower embedding of bundles ---------------------------

bool run_ultrapower_embedding(std::ostream& note) {
  for (const auto& [label, bundle] :
       {std::pair<std::string, ModelCategory>{"set2", fixtures::set_bundle(2)},
        {"abelian3", fixtures::abelian_bundle(3)}}) {
    for (int at : {0, 1}) {
      UltrapowerEmbedding emb = ultrapower_embedding(bundle, principal_ultrafilter({0, 1}, at));
      if (!emb.problems.empty()) {
        note << label << " at " << at << ": " << emb.problems.front();
        return false;
      }
      for (size_t i = 0; i < emb.object_structure.size(); ++i)
        if (emb.object_structure[i].carriers != emb.underlying_sets[i].carriers) {
          note << label << ": underlying set differs from the structure carrier";
          return false;
        }
    }
  }
  note << "both bundles, both principal ultrafilters: injective, faithful, sets match";
  return true;
}

// ---- criterion 10: the group-arrow suite ------------------------------------

bool run_ab_suite(std::ostream& note) {
  fixtures::AbFixture ab = fixtures::ab_fixture();
  GroupArrowResult r = group_arrows(*ab.cat, ab.z2_obj, ab.v4_as_square);
  if (r.arrows.size() != 1) {
    note << r.arrows.size() << " group arrows on the fixture";
    return false;
  }
  ModelCategory mc = fixtures::abelian_bundle(4);
  const Homomorphism& mu = mc.homs[r.arrows.front()];
  const Homomorphism& p1 = mc.homs[ab.v4_as_square.p1];
  const Homomorphism& p2 = mc.homs[ab.v4_as_square.p2];
  for (int e : mc.models[ab.v4_obj].carrier("g")) {
    int sum = *mc.models[ab.z2_obj].apply("add", {p1.maps.at("g").at(e), p2.maps.at("g").at(e)});
    if (mu.maps.at("g").at(e) != sum) {
      note << "the group arrow is not the addition map";
      return false;
    }
  }

  std::vector<std::vector<int>> shapes = {
      {1},          {2},    {3},    {4},    {2, 2},    {5},       {6},    {7},
      {8},          {4, 2}, {2, 2, 2}, {9},  {3, 3},    {10},      {11},   {12},
      {6, 2},       {13},   {14},   {15},   {16},      {8, 2},    {4, 4}, {4, 2, 2},
      {2, 2, 2, 2}};
  for (const auto& shape : shapes) {
    FinStructure g = abelian_product(shape);
    auto ops = concrete_group_arrows(g);
    if (ops.size() != 1) {
      note << "group of order " << g.carrier("g").size() << " admits " << ops.size()
           << " operations";
      return false;
    }
    for (int a : g.carrier("g"))
      for (int b : g.carrier("g"))
        if (ops[0].at({a, b}) != *g.apply("add", {a, b})) {
          note << "operation differs from the group law";
          return false;
        }
  }

  ExtractedGroups ex = extract_groups(*ab.cat, ab.z2_obj);
  if (!are_isomorphic(share(ex.groups.at(ab.z2_obj)), share(cyclic_group(2))) ||
      !are_isomorphic(share(ex.groups.at(ab.v4_obj)), share(abelian_product({2, 2})))) {
    note << "extracted groups are not Z/2 and V4";
    return false;
  }
  note << "unique group arrows, " << shapes.size() << " concrete groups, extraction verified";
  return true;
}

// ---- criterion 11: EF games agree with sentence agreement -------------------

bool run_ef_soundness(std::ostream& note) {
  // pools sharing a signature; truth vectors are computed once per structure
  auto agree_on_all = [](const Signature& sig, const std::vector<FinStructure>& pool,
                         std::vector<std::vector<bool>>& vectors) {
    SentenceEnumerator en(sig, {2, 12, false});
    vectors.assign(pool.size(), {});
    en.for_each([&](const Formula& f) {
      for (size_t i = 0; i < pool.size(); ++i) vectors[i].push_back(eval_formula(pool[i], f));
      return true;
    });
  };

  std::vector<FinStructure> sets{bare_set(1), bare_set(2), bare_set(3)};
  std::vector<FinStructure> preds;
  for (auto [n, p] : std::vector<std::pair<int, int>>{
           {1, 0}, {1, 1}, {2, 0}, {2, 1}, {2, 2}, {3, 0}, {3, 3}})
    preds.push_back(unary_pred_structure(n, p));

  size_t pairs = 0;
  for (const auto* pool : {&sets, &preds}) {
    std::vector<std::vector<bool>> vectors;
    agree_on_all((*pool)[0].sig, *pool, vectors);
    for (size_t i = 0; i < pool->size(); ++i)
      for (size_t j = i; j < pool->size(); ++j) {
        ++pairs;
        bool game = ef_equivalent((*pool)[i], (*pool)[j], 2);
        bool agree = vectors[i] == vectors[j];
        if (game != agree) {
          note << "pair " << i << "," << j << ": game " << game << " vs sentences " << agree;
          return false;
        }
      }
  }
  if (pairs < 30) {
    note << "only " << pairs << " pairs";
    return false;
  }
  note << pairs << " pairs, game and sentence agreement coincide";
  return true;
}

}  // namespace

int main() {
  // fixture construction is shared setup, not part of any criterion's budget
  fixtures::fixture_corpus();

  std::vector<Check> checks = {
      {1, "hom-set counts of SET^n truncations", 1000, run_homset_counts},
      {2, "category axiom validator on fixtures and mutants", 1000, run_validator},
      {3, "quasi-composition equals composition", 10000, run_qc_composition},
      {4, "homotopic agreement with skeletons", 300000, run_homotopic_agreement},
      {5, "quasi-limits equal limit existence", 120000, run_qlim},
      {6, "Los transfer and principal collapse", 120000, run_los},
      {7, "coequalizer universal property", 180000, run_coequalizers},
      {8, "term algebra and theta family", 30000, run_term_theta},
      {9, "ultrapower embedding of bundles", 60000, run_ultrapower_embedding},
      {10, "group arrows, concrete groups, extraction", 60000, run_ab_suite},
      {11, "EF games match sentence agreement", 120000, run_ef_soundness},
  };

  int failures = 0;
  for (const auto& c : checks) {
    std::ostringstream note;
    bool ok = false;
    auto t0 = std::chrono::steady_clock::now();
    try {
      ok = c.run(note);
    } catch (const std::exception& e) {
      note << "exception: " << e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    if (ok && ms > c.budget_ms) {
      ok = false;
      note << " [over budget " << c.budget_ms << "ms]";
    }
    if (!ok) ++failures;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " ("
              << ms << " ms) - " << note.str() << "\n";
  }
  std::cout << (failures ? "ACCEPTANCE: FAIL (" : "ACCEPTANCE: PASS (")
            << (checks.size() - failures) << "/" << checks.size() << " criteria)\n";
  return failures;
}
