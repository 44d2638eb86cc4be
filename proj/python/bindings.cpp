// Python bindings for the main operations. Structured data crosses the
// boundary as the same JSON documents the CLI uses; light results (counts,
// truth values, maps) come back as native python objects.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "catmod/abcheck.hpp"
#include "catmod/cat_structure.hpp"
#include "catmod/ef.hpp"
#include "catmod/enumerate.hpp"
#include "catmod/errors.hpp"
#include "catmod/eval.hpp"
#include "catmod/generators.hpp"
#include "catmod/hom_search.hpp"
#include "catmod/homotopic.hpp"
#include "catmod/json_io.hpp"
#include "catmod/limits.hpp"
#include "catmod/model_enum.hpp"
#include "catmod/modcat.hpp"
#include "catmod/parser.hpp"
#include "catmod/skeleton.hpp"
#include "catmod/term_algebra.hpp"
#include "catmod/ultra.hpp"

namespace py = pybind11;
using namespace catmod;

namespace {

FilterOnX make_filter(const std::string& filter_json, int ultra_at, int x_size) {
  if (!filter_json.empty()) return filter_from_json(filter_json);
  std::vector<int> x;
  for (int i = 0; i < x_size; ++i) x.push_back(i);
  if (ultra_at >= 0) return principal_ultrafilter(x, ultra_at);
  return trivial_filter(x);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "finite-model workbench: categories, ultraproducts, homotopic logic";

  py::register_exception<Error>(m, "CatmodError");

  // ---- logic ----
  m.def(
      "parse_formula",
      [](const std::string& sig_json, const std::string& text, bool homotopic) {
        Signature sig = signature_from_json(sig_json);
        ParseOptions opts;
        opts.allow_equality = !homotopic;
        Formula f = parse_formula(text, sig, opts);
        return py::make_tuple(print_formula(f, sig), f.quantifier_depth(), f.node_count());
      },
      py::arg("signature"), py::arg("text"), py::arg("homotopic") = false,
      "Parse a formula; returns (canonical text, quantifier depth, size).");

  m.def(
      "eval_formula",
      [](const std::string& structure_json, const std::string& text,
         const std::map<std::string, int>& env) {
        FinStructure s = structure_from_json(structure_json);
        ParseOptions opts;
        for (const auto& [v, e] : env)
          for (const auto& sort : s.sig.sorts)
            if (s.has_element(sort, e)) {
              opts.free_var_sorts.emplace(v, sort);
              break;
            }
        Formula f = parse_formula(text, s.sig, opts);
        return eval_formula(s, f, env);
      },
      py::arg("structure"), py::arg("formula"), py::arg("env") = std::map<std::string, int>{});

  m.def(
      "enumerate_sentences",
      [](const std::string& sig_json, int depth, int size, bool homotopic, std::uint64_t limit) {
        Signature sig = signature_from_json(sig_json);
        SentenceEnumerator en(sig, {depth, size, homotopic});
        std::vector<std::string> out;
        std::uint64_t n = 0;
        en.for_each([&](const Formula& f) {
          out.push_back(print_formula(f, sig));
          return ++n < limit;
        });
        return out;
      },
      py::arg("signature"), py::arg("depth"), py::arg("size"), py::arg("homotopic") = false,
      py::arg("limit") = 1000);

  m.def("count_sentences",
        [](const std::string& sig_json, int depth, int size, bool homotopic) {
          SentenceEnumerator en(signature_from_json(sig_json), {depth, size, homotopic});
          return en.count();
        },
        py::arg("signature"), py::arg("depth"), py::arg("size"), py::arg("homotopic") = false);

  // ---- structures ----
  m.def("validate_structure", [](const std::string& structure_json) {
    return validate_structure(structure_from_json(structure_json));
  });

  m.def(
      "count_homomorphisms",
      [](const std::string& a_json, const std::string& b_json, bool strong) {
        auto a = share(structure_from_json(a_json));
        auto b = share(structure_from_json(b_json));
        return enumerate_homomorphisms(a, b, strong).size();
      },
      py::arg("source"), py::arg("target"), py::arg("strong") = false);

  m.def("are_isomorphic", [](const std::string& a_json, const std::string& b_json) {
    auto a = share(structure_from_json(a_json));
    auto b = share(structure_from_json(b_json));
    return are_isomorphic(a, b).has_value();
  });

  m.def(
      "ef_equivalent",
      [](const std::string& a_json, const std::string& b_json, int rounds) {
        return ef_equivalent(structure_from_json(a_json), structure_from_json(b_json), rounds);
      },
      py::arg("a"), py::arg("b"), py::arg("rounds"));

  m.def("term_algebra", [](const std::string& sig_json) {
    TermAlgebra t = term_algebra(signature_from_json(sig_json));
    return structure_to_json(t.algebra);
  });

  m.def(
      "enumerate_models",
      [](const std::string& theory_json, int max_size) {
        std::vector<std::string> out;
        for (const auto& mm : enumerate_models(theory_from_json(theory_json), max_size))
          out.push_back(structure_to_json(mm));
        return out;
      },
      py::arg("theory"), py::arg("max_size"));

  // ---- categories ----
  m.def("validate_category", [](const std::string& cat_json) {
    std::vector<std::pair<int, std::string>> out;
    for (const auto& v : validate_category(category_from_json(cat_json)))
      out.push_back({v.axiom, v.detail});
    return out;
  });

  m.def("skeleton", [](const std::string& cat_json) {
    SkeletonResult sk = skeleton_of(share(category_from_json(cat_json)));
    return category_to_json(*sk.skeleton);
  });

  m.def("are_equivalent", [](const std::string& a_json, const std::string& b_json) {
    return are_equivalent(share(category_from_json(a_json)), share(category_from_json(b_json)))
        .has_value();
  });

  m.def("find_generators", [](const std::string& cat_json) {
    return find_generators(category_from_json(cat_json));
  });

  m.def(
      "product_exists",
      [](const std::string& cat_json, int a, int b) {
        CatPtr c = share(category_from_json(cat_json));
        return limit_of(*c, discrete_pair_diagram(c, a, b)).has_value();
      },
      py::arg("category"), py::arg("a"), py::arg("b"));

  // ---- model categories ----
  m.def(
      "build_model_category",
      [](const std::string& theory_json, int max_size, bool strong) {
        ModelCategory mc = build_model_category(theory_from_json(theory_json), max_size, strong);
        return py::make_tuple(category_to_json(*mc.cat), mc.models.size());
      },
      py::arg("theory"), py::arg("max_size"), py::arg("strong") = false);

  m.def("write_bundle",
        [](const std::string& theory_json, int max_size, bool strong, const std::string& dir) {
          write_bundle(build_model_category(theory_from_json(theory_json), max_size, strong), dir);
        });

  m.def("coequalizer", [](const std::string& f_json, const std::string& g_json) {
    CoequalizerResult co =
        coequalizer(homomorphism_from_json(f_json), homomorphism_from_json(g_json));
    return structure_to_json(co.quotient);
  });

  m.def("theta_family", [](const std::string& sig_json) {
    std::vector<std::string> out;
    for (const auto& t : theta_family(signature_from_json(sig_json)))
      out.push_back(structure_to_json(t));
    return out;
  });

  // ---- ultraproducts ----
  m.def(
      "reduced_product",
      [](const std::vector<std::string>& factors, const std::string& filter_json, int ultra_at) {
        std::vector<StructPtr> ms;
        for (const auto& f : factors) ms.push_back(share(structure_from_json(f)));
        FilterOnX u = make_filter(filter_json, ultra_at, static_cast<int>(ms.size()));
        return structure_to_json(reduced_product(ms, u).quotient);
      },
      py::arg("factors"), py::arg("filter") = std::string(), py::arg("ultra_at") = -1);

  m.def(
      "los_verify",
      [](const std::vector<std::string>& factors, const std::string& sentence,
         const std::string& filter_json, int ultra_at, int depth_cap) {
        std::vector<StructPtr> ms;
        for (const auto& f : factors) ms.push_back(share(structure_from_json(f)));
        FilterOnX u = make_filter(filter_json, ultra_at, static_cast<int>(ms.size()));
        Formula f = parse_formula(sentence, ms[0]->sig);
        LosReport rep = los_verify(ms, u, f, depth_cap);
        py::dict out;
        out["product_truth"] = rep.product_truth;
        out["truth_set"] = std::vector<int>(rep.truth_set.begin(), rep.truth_set.end());
        out["almost_everywhere"] = rep.almost_everywhere;
        out["ok"] = rep.ok;
        return out;
      },
      py::arg("factors"), py::arg("sentence"), py::arg("filter") = std::string(),
      py::arg("ultra_at") = -1, py::arg("depth_cap") = 3);

  // ---- homotopic ----
  m.def("eval_homotopic", [](const std::string& cat_json, const std::string& sentence) {
    CatPtr c = share(category_from_json(cat_json));
    Formula f = parse_formula(sentence, lhomo_signature(), {false, {}});
    return eval_homotopic(*c, build_isograph(c), f);
  });

  m.def(
      "qc_holds",
      [](const std::string& cat_json, int f, int g, int h) {
        CatPtr c = share(category_from_json(cat_json));
        return qc_holds(*c, build_isograph(c), f, g, h);
      },
      py::arg("category"), py::arg("f"), py::arg("g"), py::arg("h"));

  m.def(
      "agreement_test",
      [](const std::string& a_json, const std::string& b_json, int depth, int size,
         std::uint64_t budget, std::uint64_t seed) {
        AgreementReport rep = agreement_test(share(category_from_json(a_json)),
                                             share(category_from_json(b_json)), depth, size,
                                             budget, seed);
        py::dict out;
        out["space"] = rep.space;
        out["checked"] = rep.checked;
        out["exhaustive"] = rep.exhaustive;
        out["mismatches"] = rep.mismatches.size();
        return out;
      },
      py::arg("a"), py::arg("b"), py::arg("depth") = 2, py::arg("size") = 9,
      py::arg("budget") = 100000, py::arg("seed") = 0);

  m.def("translate_lcat", [](const std::string& formula) {
    Formula f = parse_formula(formula, lcat_signature());
    return print_formula(translate_lcat(f), lhomo_signature());
  });

  // ---- group arrows ----
  m.def("check_ab", [](const std::string& cat_json) {
    AbReport rep = check_ab(category_from_json(cat_json));
    py::dict out;
    out["products"] = rep.products;
    out["null_object"] = rep.null_object;
    out["generator"] = rep.generator;
    out["ab1"] = rep.ab1;
    out["ab2"] = rep.ab2;
    out["verdict"] = rep.verdict;
    return out;
  });

  m.def("concrete_group_arrows", [](const std::string& group_json) {
    return concrete_group_arrows(structure_from_json(group_json)).size();
  });

  // canned signatures and theories for quick experiments
  m.def("lcat_signature", [] { return signature_to_json(lcat_signature()); });
  m.def("lhomo_signature", [] { return signature_to_json(lhomo_signature()); });
  m.def("group_signature", [] { return signature_to_json(group_signature()); });
  m.def("abelian_theory", [] { return theory_to_json(abelian_theory()); });
  m.def("set_n_theory", [](int n) { return theory_to_json(set_n_theory(n)); });
  m.def("cyclic_group", [](int n) { return structure_to_json(cyclic_group(n)); });
}
