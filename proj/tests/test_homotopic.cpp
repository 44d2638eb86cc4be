#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "catmod/cat_structure.hpp"
#include "catmod/enumerate.hpp"
#include "catmod/errors.hpp"
#include "catmod/homotopic.hpp"
#include "catmod/limits.hpp"
#include "catmod/parser.hpp"
#include "catmod/skeleton.hpp"
#include "fixtures.hpp"

using namespace catmod;

TEST_CASE("built iso-graphs satisfy the invariants") {
  for (const auto& [name, cat] : fixtures::fixture_corpus()) {
    INFO(name);
    IsoGraph g = build_isograph(cat);
    CHECK(validate_isograph(g).empty());
  }
}

TEST_CASE("skeletal hosts have the discrete iso-graph") {
  CatPtr chain = fixtures::chain_poset(3);
  IsoGraph g = build_isograph(chain);
  CHECK(g.chosen.size() == chain->objects.size());
  for (const auto& [pair, m] : g.chosen) {
    CHECK(pair.first == pair.second);
    CHECK(m == chain->ids.at(pair.first));
  }
  auto all = enumerate_isographs(chain);
  CHECK(all.size() == 1);
}

TEST_CASE("the walking isomorphism has exactly one iso-graph") {
  auto all = enumerate_isographs(fixtures::walking_iso());
  REQUIRE(all.size() == 1);
  CHECK(all[0].chosen.size() == 4);  // 2 identities + 2 cross arrows
  for (const auto& g : all) CHECK(validate_isograph(g).empty());
}

TEST_CASE("nontrivial automorphisms produce several iso-graphs") {
  auto all = enumerate_isographs(fixtures::indiscrete_z2_groupoid());
  CHECK(all.size() == 2);
  for (const auto& g : all) CHECK(validate_isograph(g).empty());
}

TEST_CASE("iso-graph extension") {
  CatPtr w = fixtures::walking_iso();
  SUBCASE("identities extend") {
    CHECK(extends_to_isograph(w, {0, 1}));
    CHECK(extends_to_isograph(w, {}));
  }
  SUBCASE("a cross isomorphism extends") { CHECK(extends_to_isograph(w, {2})); }
  SUBCASE("a proper automorphism does not") {
    CatPtr z2 = fixtures::cyclic_group_category(2);
    CHECK_FALSE(extends_to_isograph(z2, {1}));
  }
  SUBCASE("mutually inverse pair whose word is fine") {
    CHECK(extends_to_isograph(w, {2, 3}));
  }
  SUBCASE("bounds") {
    CHECK_THROWS_AS(extends_to_isograph(w, {0, 1, 2, 3, 0, 1, 2, 3, 0}), Error);
  }
}

TEST_CASE("quasi-composition equals composition on matching triples") {
  for (const auto& [name, cat] : fixtures::fixture_corpus()) {
    INFO(name);
    IsoGraph g = build_isograph(cat);
    for (const auto& f : cat->morphisms)
      for (const auto& gm : cat->morphisms) {
        if (gm.dom != f.cod) continue;
        for (const auto& h : cat->morphisms) {
          if (h.dom != f.dom || h.cod != gm.cod) continue;
          bool qc = qc_holds(*cat, g, f.id, gm.id, h.id);
          bool comp = *cat->compose(gm.id, f.id) == h.id;
          CHECK(qc == comp);
        }
      }
  }
}

TEST_CASE("the iso-graph membership formula defines the chosen arrows") {
  for (const auto& [name, cat] : fixtures::skeleton_pairs_corpus()) {
    INFO(name);
    IsoGraph g = build_isograph(cat);
    Signature sig = lhomo_signature();
    ParseOptions opts;
    opts.allow_equality = false;
    opts.free_var_sorts["a"] = "m";
    Formula defi = parse_formula(
        "forall p:m. ((exists q:m. QC(a,p,q)) -> QC(a,p,p))", sig, opts);
    FinStructure s = qc_structure(*cat, g);
    std::set<int> graph_arrows;
    for (const auto& [pair, m] : g.chosen) graph_arrows.insert(m);
    for (const auto& m : cat->morphisms) {
      bool in_graph = graph_arrows.count(m.id) > 0;
      CHECK(eval_formula(s, defi, {{"a", m.id}}) == in_graph);
    }
  }
}

TEST_CASE("parallel quasi-equality collapses to equality") {
  for (const auto& [name, cat] : fixtures::fixture_corpus()) {
    INFO(name);
    IsoGraph g = build_isograph(cat);
    for (const auto& p : cat->morphisms)
      for (const auto& q : cat->morphisms) {
        if (p.dom != q.dom || p.cod != q.cod) continue;
        CHECK(quasi_equal(*cat, g, p.id, q.id) == (p.id == q.id));
      }
  }
}

TEST_CASE("homotopic truth is iso-graph independent") {
  SentenceEnumerator en(lhomo_signature(), {2, 8, true});
  std::vector<Formula> sentences;
  en.for_each([&](const Formula& f) {
    sentences.push_back(f);
    return sentences.size() < 400;
  });
  for (CatPtr cat : {fixtures::indiscrete_z2_groupoid(), fixtures::two_labeled_doubletons()}) {
    auto graphs = enumerate_isographs(cat);
    REQUIRE(graphs.size() >= 2);
    std::vector<FinStructure> structs;
    for (const auto& g : graphs) structs.push_back(qc_structure(*cat, g));
    for (const auto& f : sentences) {
      bool first = eval_formula(structs[0], f);
      for (size_t i = 1; i < structs.size(); ++i) CHECK(eval_formula(structs[i], f) == first);
    }
  }
}

TEST_CASE("simple homotopic evaluations") {
  CatPtr t = fixtures::terminal_category();
  IsoGraph g = build_isograph(t);
  Formula f = parse_formula("forall x:m. QC(x,x,x)", lhomo_signature(), {false, {}});
  CHECK(eval_homotopic(*t, g, f));
  CatPtr z2 = fixtures::cyclic_group_category(2);
  CHECK_FALSE(eval_homotopic(*z2, build_isograph(z2), f));
  Formula eq = parse_formula("forall x:m. x = x", lhomo_signature());
  CHECK_THROWS_AS(eval_homotopic(*t, g, eq), Error);
}

TEST_CASE("quasi-limits match limit existence") {
  for (const auto& [name, cat] : fixtures::fixture_corpus()) {
    if (cat->morphisms.size() > 20) continue;
    INFO(name);
    IsoGraph g = build_isograph(cat);
    // empty diagram: terminal object
    CHECK(qlim_holds(*cat, g, empty_diagram(cat)) ==
          limit_of(*cat, empty_diagram(cat)).has_value());
    // discrete pairs
    for (int a : cat->objects)
      for (int b : cat->objects) {
        Diagram d = discrete_pair_diagram(cat, a, b);
        CHECK(qlim_holds(*cat, g, d) == limit_of(*cat, d).has_value());
      }
  }
}

TEST_CASE("quasi-limits on parallel pairs and the meet lattice") {
  CatPtr dia = fixtures::diamond_poset();
  IsoGraph g = build_isograph(dia);
  Diagram pair = discrete_pair_diagram(dia, 1, 2);
  CHECK(qlim_holds(*dia, g, pair));
  CHECK(limit_of(*dia, pair).has_value());

  CatPtr pp = fixtures::parallel_pair_category();
  IsoGraph g2 = build_isograph(pp);
  Diagram d = parallel_pair_diagram(pp, 2, 3);
  CHECK(qlim_holds(*pp, g2, d) == limit_of(*pp, d).has_value());

  CatPtr d2 = fixtures::discrete_category(2);
  IsoGraph g3 = build_isograph(d2);
  CHECK_FALSE(qlim_holds(*d2, g3, discrete_pair_diagram(d2, 0, 1)));
}

TEST_CASE("quasi-limits on three-object shapes") {
  // cospan diagrams (pullback shape) across small fixtures
  for (CatPtr cat : {fixtures::diamond_poset(), fixtures::chain_poset(3),
                     fixtures::divisor_poset_12(), fixtures::walking_iso()}) {
    IsoGraph g = build_isograph(cat);
    CatPtr shape = fixtures::cospan_category();
    int checked = 0;
    for (const auto& f : cat->morphisms)
      for (const auto& gm : cat->morphisms) {
        if (cat->cod(f.id) != cat->cod(gm.id) || checked > 12) continue;
        Diagram d;
        d.shape = shape;
        d.j.source = shape;
        d.j.target = cat;
        d.j.omap = {{0, f.dom}, {1, gm.dom}, {2, f.cod}};
        d.j.mmap = {{0, cat->ids.at(f.dom)},
                    {1, cat->ids.at(gm.dom)},
                    {2, cat->ids.at(f.cod)},
                    {3, f.id},
                    {4, gm.id}};
        REQUIRE(validate_diagram(d).empty());
        CHECK(qlim_holds(*cat, g, d) == limit_of(*cat, d).has_value());
        ++checked;
      }
    CHECK(checked > 0);
  }
}

TEST_CASE("agreement between a category and its skeleton") {
  for (const auto& [name, cat] : fixtures::skeleton_pairs_corpus()) {
    INFO(name);
    CatPtr sk = skeleton_of(cat).skeleton;
    AgreementReport rep = agreement_test(cat, sk, 2, 8, 100000, 1);
    CHECK(rep.exhaustive);
    CHECK(rep.mismatches.empty());
  }
}

TEST_CASE("agreement on identical inputs") {
  CatPtr c = fixtures::composable_chain();
  AgreementReport rep = agreement_test(c, c, 2, 9, 2000, 7);
  CHECK(rep.mismatches.empty());
}

TEST_CASE("sampled agreement at depth three") {
  CatPtr c = fixtures::walking_iso();
  CatPtr sk = skeleton_of(c).skeleton;
  AgreementReport rep = agreement_test(c, sk, 3, 12, 500, 42);
  CHECK_FALSE(rep.exhaustive);
  CHECK(rep.checked == 500);
  CHECK(rep.mismatches.empty());
}

TEST_CASE("the equality sentence distinguishing a category from its skeleton") {
  // A => B isomorphic implies A = B: holds in the skeleton, fails in the
  // walking isomorphism. This is why equality is banned in homotopic logic.
  CatPtr c = fixtures::walking_iso();
  CatPtr sk = skeleton_of(c).skeleton;
  Signature sig = lcat_signature();
  Formula evil = parse_formula(
      "forall x:m. forall y:m. "
      "((rng(x) = dom(y) & rng(y) = dom(x) & y o x = Id(dom(x)) & x o y = Id(dom(y))) -> "
      "dom(x) = rng(x))",
      sig);
  FinStructure sc = fixtures::lcat_structure_of(*c);
  FinStructure ssk = fixtures::lcat_structure_of(*sk);
  CHECK_FALSE(eval_formula(sc, evil));
  CHECK(eval_formula(ssk, evil));
}

TEST_CASE("translated identity law") {
  Signature sig = lcat_signature();
  Formula f = parse_formula("forall X:o. Id(X) o Id(X) = Id(X)", sig);
  Formula t = translate_lcat(f);
  CHECK_FALSE(t.contains_equality());
  // true on all skeletal fixtures under the discrete iso-graph
  for (const auto& [name, cat] : fixtures::fixture_corpus()) {
    if (cat->morphisms.size() > 16) continue;
    CatPtr sk = skeleton_of(cat).skeleton;
    INFO(name);
    IsoGraph g = build_isograph(sk);
    CHECK(eval_homotopic(*sk, g, t) == eval_formula(fixtures::lcat_structure_of(*sk), f));
  }
}

TEST_CASE("translation preserves truth on skeletal categories") {
  Signature sig = lcat_signature();
  std::vector<Formula> formulas;
  formulas.push_back(parse_formula("forall x:m. x o x = x", sig));
  formulas.push_back(parse_formula("exists x:m. x o x = x", sig));
  formulas.push_back(parse_formula("forall x:m. forall y:m. x o y = y o x", sig));
  formulas.push_back(parse_formula("exists X:o. forall y:m. (dom(y) = X -> y o Id(X) = y)", sig));
  formulas.push_back(parse_formula("forall X:o. exists y:m. dom(y) = X", sig));
  formulas.push_back(
      parse_formula("forall x:m. forall y:m. (rng(x) = dom(y) -> dom(y o x) = dom(x))", sig));
  formulas.push_back(cat_axiom_sentences()[1]);
  for (const auto& [name, cat] : fixtures::fixture_corpus()) {
    if (cat->morphisms.size() > 12) continue;
    CatPtr sk = skeleton_of(cat).skeleton;
    INFO(name);
    IsoGraph g = build_isograph(sk);
    FinStructure enc = fixtures::lcat_structure_of(*sk);
    FinStructure qc = qc_structure(*sk, g);
    for (const auto& f : formulas) {
      Formula t = translate_lcat(f);
      CHECK(eval_formula(enc, f) == eval_formula(qc, t));
    }
  }
}

TEST_CASE("enumerated sentences translate soundly at low depth") {
  Signature sig = lcat_signature();
  std::vector<Formula> sentences;
  {
    SentenceEnumerator en(sig, {2, 7, false});
    en.for_each([&](const Formula& f) {
      sentences.push_back(f);
      return sentences.size() < 600;
    });
  }
  // plus a seeded slice of the deeper space
  for (const auto& f : sample_sentences(sig, {2, 9, false}, 150, 31)) sentences.push_back(f);
  for (CatPtr sk : {fixtures::chain_poset(2), fixtures::cyclic_group_category(2)}) {
    FinStructure enc = fixtures::lcat_structure_of(*sk);
    IsoGraph g = build_isograph(sk);
    FinStructure qc = qc_structure(*sk, g);
    for (const auto& f : sentences) {
      Formula t = translate_lcat(f);
      CHECK(eval_formula(enc, f) == eval_formula(qc, t));
    }
  }
}

TEST_CASE("quasi-composition transfers along the skeleton projection") {
  for (const auto& [name, cat] : fixtures::skeleton_pairs_corpus()) {
    INFO(name);
    SkeletonResult sr = skeleton_of(cat);
    IsoGraph gc = build_isograph(cat);
    IsoGraph gs = build_isograph(sr.skeleton);
    for (const auto& f : cat->morphisms)
      for (const auto& gm : cat->morphisms)
        for (const auto& h : cat->morphisms) {
          bool up = qc_holds(*cat, gc, f.id, gm.id, h.id);
          bool down = qc_holds(*sr.skeleton, gs, sr.projection.mor(f.id), sr.projection.mor(gm.id),
                               sr.projection.mor(h.id));
          CHECK(up == down);
        }
  }
}
