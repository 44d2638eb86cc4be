#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <random>

#include "catmod/errors.hpp"
#include "catmod/eval.hpp"
#include "catmod/hom_search.hpp"
#include "catmod/json_io.hpp"
#include "catmod/limits.hpp"
#include "catmod/term_algebra.hpp"
#include "fixtures.hpp"

using namespace catmod;

TEST_CASE("the two-element-set model category") {
  ModelCategory mc = fixtures::set_bundle(2);
  CHECK(mc.models.size() == 1);
  CHECK(mc.cat->morphisms.size() == 4);
  CHECK(validate_category(*mc.cat).empty());
}

TEST_CASE("the one-element-set model category is terminal") {
  ModelCategory mc = fixtures::set_bundle(1);
  CHECK(mc.models.size() == 1);
  CHECK(mc.cat->morphisms.size() == 1);
}

TEST_CASE("abelian truncation at size four") {
  ModelCategory mc = fixtures::abelian_bundle(4);
  CHECK(mc.models.size() == 5);
  CHECK(validate_category(*mc.cat).empty());
  // Hom(Z/2, Z/2) has two elements
  int z2 = -1;
  for (int i = 0; i < 5; ++i)
    if (mc.models[i].carrier("g").size() == 2) z2 = i;
  REQUIRE(z2 >= 0);
  CHECK(mc.cat->hom(z2, z2).size() == 2);
  // category composition agrees with homomorphism composition
  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto& f = mc.cat->morphisms[rng() % mc.cat->morphisms.size()];
    for (const auto& g : mc.cat->morphisms) {
      if (g.dom != f.cod) continue;
      int h = *mc.cat->compose(g.id, f.id);
      Homomorphism direct = compose(mc.homs[g.id], mc.homs[f.id]);
      CHECK(mc.homs[h].maps == direct.maps);
      break;
    }
  }
}

TEST_CASE("builds are deterministic") {
  ModelCategory a = fixtures::abelian_bundle(3);
  ModelCategory b = fixtures::abelian_bundle(3);
  CHECK(*a.cat == *b.cat);
  REQUIRE(a.models.size() == b.models.size());
  for (size_t i = 0; i < a.models.size(); ++i) CHECK(a.models[i] == b.models[i]);
  for (size_t i = 0; i < a.homs.size(); ++i) CHECK(a.homs[i].maps == b.homs[i].maps);
}

TEST_CASE("strong and plain builds coincide without relations") {
  ModelCategory plain = fixtures::abelian_bundle(3);
  ModelCategory strong = build_model_category(abelian_theory(), 3, true);
  CHECK(plain.cat->morphisms.size() == strong.cat->morphisms.size());
  // with a relation they differ
  ModelCategory up = fixtures::unary_pred_bundle(2, false);
  ModelCategory ups = fixtures::unary_pred_bundle(2, true);
  CHECK(up.cat->morphisms.size() > ups.cat->morphisms.size());
}

TEST_CASE("coequalizer of the identity pair is the identity") {
  auto z4 = share(cyclic_group(4));
  Homomorphism id = identity_hom(z4);
  CoequalizerResult co = coequalizer(id, id);
  CHECK(co.quotient.carrier("g").size() == 4);
  CHECK(injective(co.projection));
}

TEST_CASE("coequalizer of identity and negation on Z/3 is trivial") {
  auto z3 = share(cyclic_group(3));
  Homomorphism id = identity_hom(z3);
  Homomorphism neg;
  neg.source = neg.target = z3;
  neg.maps["g"] = {{0, 0}, {1, 2}, {2, 1}};
  REQUIRE(validate_homomorphism(neg).empty());
  CoequalizerResult co = coequalizer(id, neg);
  // the plain transitive closure would stop at {0}, {1,2}; the congruence
  // closure collapses everything
  CHECK(co.quotient.carrier("g").size() == 1);
  CHECK(satisfies(co.quotient, abelian_theory()));
}

TEST_CASE("coequalizer on bare sets identifies the two images") {
  FinStructure one;
  one.sig.sorts = {"s"};
  one.carriers["s"] = {0};
  FinStructure two;
  two.sig.sorts = {"s"};
  two.carriers["s"] = {0, 1};
  auto a = share(one), b = share(two);
  Homomorphism f{a, b, {{"s", {{0, 0}}}}, false};
  Homomorphism g{a, b, {{"s", {{0, 1}}}}, false};
  CoequalizerResult co = coequalizer(f, g);
  CHECK(co.quotient.carrier("s").size() == 1);

  // universal property against all small bare sets
  std::vector<StructPtr> targets;
  for (int n = 1; n <= 2; ++n) {
    FinStructure t;
    t.sig.sorts = {"s"};
    for (int i = 0; i < n; ++i) t.carriers["s"].push_back(i);
    targets.push_back(share(t));
  }
  CHECK(coequalizer_universal_report(f, g, co, targets).empty());
}

TEST_CASE("coequalizer universal property on seeded abelian pairs") {
  ModelCategory mc = fixtures::abelian_bundle(4);
  std::vector<StructPtr> targets;
  for (const auto& m : mc.models) targets.push_back(share(m));
  std::mt19937 rng(11);
  int done = 0;
  while (done < 10) {
    const auto& f = mc.homs[rng() % mc.homs.size()];
    // find a parallel partner
    std::vector<int> partners;
    for (int i = 0; i < static_cast<int>(mc.homs.size()); ++i)
      if (*mc.homs[i].source == *f.source && *mc.homs[i].target == *f.target) partners.push_back(i);
    const auto& g = mc.homs[partners[rng() % partners.size()]];
    CoequalizerResult co = coequalizer(f, g);
    CHECK(coequalizer_universal_report(f, g, co, targets).empty());
    ++done;
  }
}

TEST_CASE("a non-strong coequalizer projection exists") {
  // f, g: {a} => ({0,1}, P = {1}) with f(a)=0, g(a)=1
  FinStructure one = unary_pred_structure(1, 0);
  FinStructure two = unary_pred_structure(2, 0);
  two.rels["P"] = {{1}};
  auto a = share(one), b = share(two);
  Homomorphism f{a, b, {{"s", {{0, 0}}}}, false};
  Homomorphism g{a, b, {{"s", {{0, 1}}}}, false};
  REQUIRE(validate_homomorphism(f).empty());
  REQUIRE(validate_homomorphism(g).empty());
  CoequalizerResult co = coequalizer(f, g);
  CHECK(co.quotient.carrier("s").size() == 1);
  // 0 is not in P upstairs but its class is in P downstairs
  Homomorphism strong_check = co.projection;
  strong_check.strong = true;
  CHECK(validate_homomorphism(co.projection).empty());
  CHECK(!validate_homomorphism(strong_check).empty());
}

TEST_CASE("non-parallel pairs are rejected") {
  auto z2 = share(cyclic_group(2));
  auto z3 = share(cyclic_group(3));
  Homomorphism f = identity_hom(z2);
  Homomorphism g = identity_hom(z3);
  CHECK_THROWS_AS(coequalizer(f, g), Error);
}

TEST_CASE("unary coproducts") {
  SUBCASE("empty family") {
    CoproductResult cp = coproduct_unary({});
    CHECK(cp.sum.carriers.empty());
    CHECK(cp.injections.empty());
  }
  SUBCASE("bare sets add up") {
    FinStructure a;
    a.sig.sorts = {"s"};
    a.carriers["s"] = {0, 1};
    FinStructure b;
    b.sig.sorts = {"s"};
    b.carriers["s"] = {0, 1, 2};
    CoproductResult cp = coproduct_unary({share(a), share(b)});
    CHECK(cp.sum.carrier("s").size() == 5);
    std::vector<StructPtr> targets{share(a), share(b), share(cp.sum)};
    CHECK(coproduct_universal_report(cp, targets).empty());
  }
  SUBCASE("one-loop unary structures") {
    FinStructure loop;
    loop.sig.sorts = {"s"};
    loop.sig.functions["f"] = {{"s"}, "s", false};
    loop.carriers["s"] = {0};
    loop.funcs["f"][{0}] = 0;
    CoproductResult cp = coproduct_unary({share(loop), share(loop)});
    CHECK(cp.sum.carrier("s").size() == 2);
    for (const auto& inj : cp.injections) CHECK(validate_homomorphism(inj).empty());
    CHECK(coproduct_universal_report(cp, {share(loop), share(cp.sum)}).empty());
  }
  SUBCASE("constants are rejected") {
    CHECK_THROWS_AS(coproduct_unary({share(cyclic_group(2))}), Error);
  }
}

TEST_CASE("theta family over small signatures") {
  SUBCASE("empty signature") {
    Signature sig;
    sig.sorts = {"s"};
    auto theta = theta_family(sig);
    REQUIRE(theta.size() == 1);
    CHECK(theta[0].carrier("s").size() == 1);
    // Hom_str(theta, M) is in bijection with D(M)
    auto m = share(unary_pred_structure(3, 0));
    FinStructure t0 = theta[0];
    t0.sig = m->sig;
    t0.rels["P"] = {};
    auto homs = enumerate_homomorphisms(share(t0), m, true);
    CHECK(homs.size() == 3);
  }
  SUBCASE("one unary predicate") {
    Signature sig;
    sig.sorts = {"s"};
    sig.relations["P"] = {"s"};
    auto theta = theta_family(sig);
    REQUIRE(theta.size() == 2);
    // strong homs from the two expansions partition D(M), M = ({0,1}, P={1})
    FinStructure m = unary_pred_structure(2, 0);
    m.rels["P"] = {{1}};
    StructPtr mp = share(m);
    std::map<int, int> hits;  // element -> number of (theta, hom) pairs
    for (const auto& t : theta)
      for (const auto& h : enumerate_homomorphisms(share(t), mp, true))
        hits[h.maps.at("s").at(0)]++;
    CHECK(hits == std::map<int, int>{{0, 1}, {1, 1}});
  }
}

TEST_CASE("theta expansions separate parallel strong homomorphisms") {
  ModelCategory mc = fixtures::unary_pred_bundle(2, true);
  Signature psig;
  psig.sorts = {"s"};
  psig.relations["P"] = {"s"};
  auto theta = theta_family(psig);
  for (const auto& f : mc.cat->morphisms)
    for (const auto& g : mc.cat->morphisms) {
      if (f.id >= g.id || f.dom != g.dom || f.cod != g.cod) continue;
      const Homomorphism& hf = mc.homs[f.id];
      const Homomorphism& hg = mc.homs[g.id];
      bool separated = false;
      for (const auto& th : theta)
        for (const auto& a : enumerate_homomorphisms(share(th), hf.source, true)) {
          Homomorphism fa = compose(hf, a);
          Homomorphism ga = compose(hg, a);
          if (fa.maps != ga.maps) separated = true;
        }
      CHECK(separated);
    }
}

TEST_CASE("bundle round trip") {
  namespace fs = std::filesystem;
  ModelCategory mc = fixtures::abelian_bundle(3);
  std::string dir = (fs::temp_directory_path() / "catmod_bundle_test").string();
  fs::remove_all(dir);
  write_bundle(mc, dir);
  CHECK(fs::exists(fs::path(dir) / "category.json"));
  CHECK(fs::exists(fs::path(dir) / "meta.json"));
  CHECK(fs::exists(fs::path(dir) / "models" / "M0.json"));
  ModelCategory back = read_bundle(dir);
  CHECK(*back.cat == *mc.cat);
  CHECK(back.models.size() == mc.models.size());
  for (size_t i = 0; i < mc.homs.size(); ++i) CHECK(back.homs[i].maps == mc.homs[i].maps);
  fs::remove_all(dir);
}

TEST_CASE("limits computed categorically match set-level constructions") {
  fixtures::AbFixture ab = fixtures::ab_fixture();
  ModelCategory mc = fixtures::abelian_bundle(4);

  SUBCASE("equalizers are subset structures") {
    // parallel pair V4 => Z/2: the two projections
    int p1 = ab.v4_as_square.p1;
    int p2 = ab.v4_as_square.p2;
    Diagram d = parallel_pair_diagram(ab.cat, p1, p2);
    auto lim = limit_of(*ab.cat, d);
    REQUIRE(lim.has_value());
    // the equalizer of the projections is the diagonal, a copy of Z/2
    CHECK(mc.models[lim->apex].carrier("g").size() == 2);
  }

  SUBCASE("coequalizers computed categorically match the quotient") {
    const Homomorphism& f = mc.homs[ab.v4_as_square.p1];
    const Homomorphism& g = mc.homs[ab.v4_as_square.p2];
    CoequalizerResult co = coequalizer(f, g);
    Diagram d = parallel_pair_diagram(ab.cat, ab.v4_as_square.p1, ab.v4_as_square.p2);
    auto colim = limit_of(*ab.cat, d, true);
    REQUIRE(colim.has_value());
    CHECK(are_isomorphic(share(co.quotient), share(mc.models[colim->apex])).has_value());
  }
}
