#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "catmod/config.hpp"
#include "catmod/errors.hpp"
#include "catmod/eval.hpp"
#include "catmod/json_io.hpp"
#include "catmod/parser.hpp"
#include "fixtures.hpp"

using namespace catmod;

// must run before anything touches global_caps(): the config loads once
TEST_CASE("caps load from the CATMOD_CONFIG file") {
  namespace fs = std::filesystem;
  std::string path = (fs::temp_directory_path() / "catmod_caps.json").string();
  {
    std::ofstream out(path);
    out << R"({"max_model_size": 5, "ef_rounds_max": 4, "seed": 99})";
  }
  setenv("CATMOD_CONFIG", path.c_str(), 1);
  const Caps& caps = global_caps();
  CHECK(caps.max_model_size == 5);
  CHECK(caps.ef_rounds_max == 4);
  CHECK(caps.seed == 99);
  CHECK(caps.term_algebra_cap == 10000);  // untouched default
  fs::remove(path);
}

TEST_CASE("signature json round trip") {
  for (const Signature& sig : {lcat_signature(), lhomo_signature(), group_signature()}) {
    Signature back = signature_from_json(signature_to_json(sig));
    CHECK(back == sig);
  }
  CHECK_THROWS_AS(signature_from_json("{not json"), Error);
  // undeclared sort in a profile is rejected
  CHECK_THROWS_AS(
      signature_from_json(R"({"sorts":["a"],"constants":{"c":"b"}})"), Error);
}

TEST_CASE("structure json round trip") {
  for (const FinStructure& m :
       {cyclic_group(3), unary_pred_structure(3, 1),
        direct_product(cyclic_group(2), cyclic_group(2))}) {
    FinStructure back = structure_from_json(structure_to_json(m));
    CHECK(back == m);
  }
}

TEST_CASE("theory json round trip") {
  Theory t = abelian_theory();
  Theory back = theory_from_json(theory_to_json(t));
  CHECK(back.sig == t.sig);
  REQUIRE(back.sentences.size() == t.sentences.size());
  for (size_t i = 0; i < t.sentences.size(); ++i) CHECK(back.sentences[i] == t.sentences[i]);
}

TEST_CASE("category json round trip") {
  for (const auto& [name, cat] : fixtures::fixture_corpus()) {
    INFO(name);
    FinCategory back = category_from_json(category_to_json(*cat));
    CHECK(back == *cat);
  }
}

TEST_CASE("filter json round trip") {
  for (const auto& f :
       {principal_ultrafilter({0, 1, 2}, 1), trivial_filter({0, 1})}) {
    FilterOnX back = filter_from_json(filter_to_json(f));
    CHECK(back.x == f.x);
    CHECK(back.members == f.members);
    CHECK(back.ultra == f.ultra);
  }
}

TEST_CASE("homomorphism json round trip") {
  auto z2 = share(cyclic_group(2));
  Homomorphism h = identity_hom(z2);
  Homomorphism back = homomorphism_from_json(full_homomorphism_to_json(h));
  CHECK(back.maps == h.maps);
  CHECK(*back.source == *h.source);
  CHECK(validate_homomorphism(back).empty());
}

TEST_CASE("diagram json parsing") {
  CatPtr host = fixtures::divisor_poset_12();
  std::string text = R"({
    "shape": {"objects": [0, 1],
              "morphisms": [{"id": 0, "dom": 0, "cod": 0}, {"id": 1, "dom": 1, "cod": 1}],
              "comp": [[0,0,0],[1,1,1]],
              "ids": {"0": 0, "1": 1}},
    "objects": {"0": 3, "1": 4},
    "morphisms": {"0": 10, "1": 14}
  })";
  // identity morphism ids in the poset are looked up dynamically to keep
  // the fixture stable
  std::string fixed = text;
  auto replace = [&](const std::string& from, int to) {
    auto pos = fixed.find(from);
    fixed.replace(pos, from.size(), std::to_string(to));
  };
  replace("10", host->ids.at(3));
  replace("14", host->ids.at(4));
  Diagram d = diagram_from_json(fixed, host);
  CHECK(validate_diagram(d).empty());
  CHECK(d.j.obj(0) == 3);
}

TEST_CASE("reports are deterministic") {
  ModelCategory mc = fixtures::set_bundle(2);
  std::string a = category_to_json(*mc.cat);
  std::string b = category_to_json(*mc.cat);
  CHECK(a == b);
  std::string sa = structure_to_json(mc.models[0]);
  std::string sb = structure_to_json(mc.models[0]);
  CHECK(sa == sb);
}

TEST_CASE("bundle files survive a write-read cycle through the json layer") {
  namespace fs = std::filesystem;
  ModelCategory mc = fixtures::unary_pred_bundle(2, true);
  std::string dir = (fs::temp_directory_path() / "catmod_io_bundle").string();
  fs::remove_all(dir);
  write_bundle(mc, dir);
  ModelCategory back = read_bundle(dir);
  CHECK(*back.cat == *mc.cat);
  CHECK(back.strong == mc.strong);
  for (size_t i = 0; i < back.homs.size(); ++i) {
    CHECK(validate_homomorphism(back.homs[i]).empty());
    CHECK(back.homs[i].maps == mc.homs[i].maps);
  }
  fs::remove_all(dir);
}
