// catmod: a workbench for finite categories, model categories, ultraproducts
// and homotopic (equality-free) evaluation. JSON reports go to stdout, a
// short human summary to stderr. Exit codes: 0 success / empty violation
// report, 1 negative domain verdict, 2 usage or input error.

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>

#include "catmod/abcheck.hpp"
#include "catmod/cat_structure.hpp"
#include "catmod/config.hpp"
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
#include "catmod/parser.hpp"
#include "catmod/skeleton.hpp"
#include "catmod/term_algebra.hpp"
#include "catmod/ultra.hpp"

using json = nlohmann::json;
using namespace catmod;

namespace {

std::string g_format = "json";

int emit(const json& report, bool ok, const std::string& summary) {
  if (g_format == "text") {
    std::cout << summary << "\n";
  } else {
    std::cout << report.dump(2) << "\n";
  }
  std::cerr << (ok ? "ok: " : "verdict: ") << summary << "\n";
  return ok ? 0 : 1;
}

json jparse(const std::string& text) { return json::parse(text); }

FilterOnX filter_from_flags(const std::string& filter_path, int ultra_at, int x_size) {
  if (!filter_path.empty()) return filter_from_json(read_file(filter_path));
  std::vector<int> x;
  for (int i = 0; i < x_size; ++i) x.push_back(i);
  if (ultra_at >= 0) return principal_ultrafilter(x, ultra_at);
  return trivial_filter(x);
}

std::vector<StructPtr> structures_from_paths(const std::vector<std::string>& paths) {
  std::vector<StructPtr> out;
  for (const auto& p : paths) out.push_back(share(structure_from_json(read_file(p))));
  return out;
}

json category_report(const std::vector<CatViolation>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back({{"axiom", v.axiom}, {"detail", v.detail}});
  return out;
}

// exhaustive cone/sentence searches are guarded by the configurable cap
void check_category_cap(const FinCategory& c) {
  int cap = global_caps().category_morphism_cap;
  if (static_cast<int>(c.morphisms.size()) > cap)
    fail("BoundsExceeded", "category has " + std::to_string(c.morphisms.size()) +
                               " morphisms, cap is " + std::to_string(cap));
}

Env env_from_json(const std::string& text) {
  Env env;
  if (text.empty()) return env;
  for (const auto& [k, v] : jparse(text).items()) env[k] = v.get<int>();
  return env;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-model workbench for the first-order theory of categories"};
  app.require_subcommand(1);
  app.add_option("--format", g_format, "json or text")->check(CLI::IsMember({"json", "text"}));
  std::uint64_t seed = global_caps().seed;
  app.add_option("--seed", seed, "seed for sampling commands");

  int exit_code = 0;
  auto run = [&](const std::function<int()>& body) {
    return [&exit_code, body]() { exit_code = body(); };
  };

  // ---- logic ---------------------------------------------------------------
  auto* logic = app.add_subcommand("logic", "formula parsing, evaluation, enumeration");
  {
    auto* parse = logic->add_subcommand("parse", "parse and report a formula");
    static std::string sig_path, formula;
    static bool homotopic = false;
    parse->add_option("--sig", sig_path)->required();
    parse->add_option("--formula", formula)->required();
    parse->add_flag("--homotopic", homotopic, "forbid equality atoms");
    parse->callback(run([&]() {
      Signature sig = signature_from_json(read_file(sig_path));
      ParseOptions opts;
      opts.allow_equality = !homotopic;
      Formula f = parse_formula(formula, sig, opts);
      json rep{{"formula", print_formula(f, sig)},
               {"depth", f.quantifier_depth()},
               {"size", f.node_count()},
               {"free_vars", f.free_vars()},
               {"equality_free", !f.contains_equality()}};
      return emit(rep, true, "parsed: " + print_formula(f, sig));
    }));

    auto* eval = logic->add_subcommand("eval", "evaluate a formula on a structure");
    static std::string struct_path, env_text;
    static std::string eval_formula_text;
    eval->add_option("--structure", struct_path)->required();
    eval->add_option("--formula", eval_formula_text)->required();
    eval->add_option("--env", env_text, "JSON object variable -> element");
    eval->callback(run([&]() {
      FinStructure m = structure_from_json(read_file(struct_path));
      Env env = env_from_json(env_text);
      ParseOptions opts;
      for (const auto& [v, e] : env)
        for (const auto& s : m.sig.sorts)
          if (m.has_element(s, e)) {
            opts.free_var_sorts.emplace(v, s);
            break;
          }
      Formula f = parse_formula(eval_formula_text, m.sig, opts);
      bool value = eval_formula(m, f, env);
      return emit(json{{"value", value}}, value, value ? "true" : "false");
    }));

    auto* sentences = logic->add_subcommand("sentences", "enumerate sentences");
    static std::string sen_sig_path;
    static int depth = 2, size = 8;
    static bool sen_homotopic = false;
    static std::uint64_t limit = 100;
    static bool count_only = false;
    sentences->add_option("--sig", sen_sig_path)->required();
    sentences->add_option("--depth", depth);
    sentences->add_option("--size", size);
    sentences->add_flag("--homotopic", sen_homotopic);
    sentences->add_option("--limit", limit, "print at most this many");
    sentences->add_flag("--count", count_only);
    sentences->callback(run([&]() {
      Signature sig = signature_from_json(read_file(sen_sig_path));
      SentenceEnumerator en(sig, {depth, size, sen_homotopic});
      json rep{{"count", en.count()}};
      if (!count_only) {
        json list = json::array();
        std::uint64_t n = 0;
        en.for_each([&](const Formula& f) {
          list.push_back(print_formula(f, sig));
          return ++n < limit;
        });
        rep["sentences"] = std::move(list);
      }
      return emit(rep, true, std::to_string(en.count()) + " sentences in bounds");
    }));
  }

  // ---- struct ----------------------------------------------------------------
  auto* st = app.add_subcommand("struct", "finite structures");
  {
    auto* validate = st->add_subcommand("validate", "closure conditions");
    static std::string v_path;
    validate->add_option("structure", v_path)->required();
    validate->callback(run([&]() {
      auto report = validate_structure(structure_from_json(read_file(v_path)));
      return emit(json{{"violations", report}}, report.empty(),
                  report.empty() ? "valid" : report.front());
    }));

    auto* homs = st->add_subcommand("homs", "enumerate homomorphisms");
    static std::string a_path, b_path;
    static bool strong = false, count_only = false;
    homs->add_option("source", a_path)->required();
    homs->add_option("target", b_path)->required();
    homs->add_flag("--strong", strong);
    homs->add_flag("--count-only", count_only);
    homs->callback(run([&]() {
      auto a = share(structure_from_json(read_file(a_path)));
      auto b = share(structure_from_json(read_file(b_path)));
      auto hs = enumerate_homomorphisms(a, b, strong);
      json rep{{"count", hs.size()}};
      if (!count_only) {
        json list = json::array();
        for (const auto& h : hs) list.push_back(jparse(homomorphism_to_json(h)));
        rep["homs"] = std::move(list);
      }
      return emit(rep, true, std::to_string(hs.size()) + " homomorphisms");
    }));

    auto* iso = st->add_subcommand("iso", "isomorphism search");
    static std::string ia_path, ib_path;
    iso->add_option("source", ia_path)->required();
    iso->add_option("target", ib_path)->required();
    iso->callback(run([&]() {
      auto a = share(structure_from_json(read_file(ia_path)));
      auto b = share(structure_from_json(read_file(ib_path)));
      auto w = are_isomorphic(a, b);
      json rep{{"isomorphic", w.has_value()}};
      if (w) rep["witness"] = jparse(homomorphism_to_json(*w));
      return emit(rep, w.has_value(), w ? "isomorphic" : "not isomorphic");
    }));

    auto* ef = st->add_subcommand("ef", "bounded elementary equivalence game");
    static std::string ea_path, eb_path;
    static int rounds = 2;
    ef->add_option("source", ea_path)->required();
    ef->add_option("target", eb_path)->required();
    ef->add_option("--rounds", rounds);
    ef->callback(run([&]() {
      FinStructure a = structure_from_json(read_file(ea_path));
      FinStructure b = structure_from_json(read_file(eb_path));
      bool eq = ef_equivalent(a, b, rounds, global_caps().ef_rounds_max);
      return emit(json{{"equivalent", eq}, {"rounds", rounds}}, eq,
                  eq ? "duplicator wins" : "spoiler wins");
    }));

    auto* models = st->add_subcommand("models", "enumerate models up to isomorphism");
    static std::string t_path;
    static int max_size = 3;
    models->add_option("--theory", t_path)->required();
    models->add_option("--max-size", max_size);
    models->callback(run([&]() {
      Theory t = theory_from_json(read_file(t_path));
      auto ms = enumerate_models(t, max_size, global_caps().max_model_size);
      json list = json::array();
      for (const auto& m : ms) list.push_back(jparse(structure_to_json(m)));
      return emit(json{{"count", ms.size()}, {"models", list}}, true,
                  std::to_string(ms.size()) + " models");
    }));

    auto* termalg = st->add_subcommand("termalg", "one-variable term algebra");
    static std::string ta_sig_path;
    termalg->add_option("--sig", ta_sig_path)->required();
    termalg->callback(run([&]() {
      Signature sig = signature_from_json(read_file(ta_sig_path));
      TermAlgebra t = term_algebra(sig, global_caps().term_algebra_cap);
      json elements = json::array();
      for (const auto& term : t.element_terms) elements.push_back(print_term(term, sig));
      return emit(json{{"structure", jparse(structure_to_json(t.algebra))},
                       {"elements", elements}},
                  true, std::to_string(t.element_terms.size()) + " terms");
    }));

    auto* pullback = st->add_subcommand("pullback", "relation pullback along a reduct map");
    static std::string pb_target, pb_reduct, pb_map;
    pullback->add_option("--target", pb_target, "full structure M")->required();
    pullback->add_option("--reduct", pb_reduct, "function-fragment structure N")->required();
    pullback->add_option("--map", pb_map, "JSON sort -> {element: image}")->required();
    pullback->callback(run([&]() {
      FinStructure m = structure_from_json(read_file(pb_target));
      FinStructure n = structure_from_json(read_file(pb_reduct));
      std::map<std::string, std::map<int, int>> f;
      for (const auto& [s, mm] : jparse(pb_map).items())
        for (const auto& [e, v] : mm.items()) f[s][std::stoi(e)] = v.get<int>();
      FinStructure pulled = pullback_structure(f, m, n);
      return emit(jparse(structure_to_json(pulled)), true, "pullback structure built");
    }));
  }

  // ---- cat -------------------------------------------------------------------
  auto* cat = app.add_subcommand("cat", "finite categories");
  {
    auto* validate = cat->add_subcommand("validate", "category axioms");
    static std::string path;
    validate->add_option("category", path)->required();
    validate->callback(run([&]() {
      auto report = validate_category(category_from_json(read_file(path)));
      return emit(json{{"violations", category_report(report)}}, report.empty(),
                  report.empty() ? "valid category"
                                 : "axiom " + std::to_string(report.front().axiom) + ": " +
                                       report.front().detail);
    }));

    static std::string lim_cat, lim_diagram;
    auto add_limit_cmd = [&](const char* name, bool colimit, const char* what) {
      auto* cmd = cat->add_subcommand(name, what);
      cmd->add_option("category", lim_cat)->required();
      cmd->add_option("--diagram", lim_diagram)->required();
      cmd->callback(run([&, colimit]() {
        CatPtr c = share(category_from_json(read_file(lim_cat)));
        check_category_cap(*c);
        Diagram d = diagram_from_json(read_file(lim_diagram), c);
        auto cone = limit_of(*c, d, colimit);
        json rep{{"exists", cone.has_value()}};
        if (cone) {
          rep["apex"] = cone->apex;
          json legs = json::object();
          for (const auto& [a, m] : cone->legs) legs[std::to_string(a)] = m;
          rep["legs"] = std::move(legs);
        }
        return emit(rep, cone.has_value(), cone ? "exists" : "does not exist");
      }));
    };
    add_limit_cmd("limit", false, "limit of a finite diagram");
    add_limit_cmd("colimit", true, "colimit of a finite diagram");

    auto* skel = cat->add_subcommand("skeleton", "skeleton and projection functor");
    static std::string sk_path;
    skel->add_option("category", sk_path)->required();
    skel->callback(run([&]() {
      SkeletonResult sk = skeleton_of(share(category_from_json(read_file(sk_path))));
      json omap = json::object(), mmap = json::object();
      for (const auto& [o, v] : sk.projection.omap) omap[std::to_string(o)] = v;
      for (const auto& [m, v] : sk.projection.mmap) mmap[std::to_string(m)] = v;
      return emit(json{{"skeleton", jparse(category_to_json(*sk.skeleton))},
                       {"projection", {{"objects", omap}, {"morphisms", mmap}}}},
                  true, std::to_string(sk.skeleton->objects.size()) + " iso classes");
    }));

    auto* equiv = cat->add_subcommand("equiv", "equivalence of categories");
    static std::string eq_a, eq_b;
    equiv->add_option("first", eq_a)->required();
    equiv->add_option("second", eq_b)->required();
    equiv->callback(run([&]() {
      auto w = are_equivalent(share(category_from_json(read_file(eq_a))),
                              share(category_from_json(read_file(eq_b))));
      json rep{{"equivalent", w.has_value()}};
      if (w) {
        json omap = json::object();
        for (const auto& [o, v] : w->to.omap) omap[std::to_string(o)] = v;
        rep["to_objects"] = std::move(omap);
      }
      return emit(rep, w.has_value(), w ? "equivalent" : "not equivalent");
    }));

    auto* gens = cat->add_subcommand("generators", "generator objects and families");
    static std::string gen_path;
    gens->add_option("category", gen_path)->required();
    gens->callback(run([&]() {
      FinCategory c = category_from_json(read_file(gen_path));
      auto singles = find_generators(c);
      auto families = minimal_generating_families(c);
      json fam = json::array();
      for (const auto& f : families)
        fam.push_back({{"members", f.members}, {"locally_unique", f.locally_unique}});
      return emit(json{{"generators", singles}, {"families", fam}}, true,
                  std::to_string(singles.size()) + " generators, " +
                      std::to_string(families.size()) + " minimal families");
    }));

    auto* homcount = cat->add_subcommand("homcount", "hom-set sizes");
    static std::string hc_path;
    static int from = -1, to = -1;
    homcount->add_option("category", hc_path)->required();
    homcount->add_option("--from", from);
    homcount->add_option("--to", to);
    homcount->callback(run([&]() {
      FinCategory c = category_from_json(read_file(hc_path));
      json pairs = json::array();
      size_t total = 0;
      for (int a : c.objects)
        for (int b : c.objects) {
          if (from >= 0 && a != from) continue;
          if (to >= 0 && b != to) continue;
          size_t n = c.hom(a, b).size();
          total += n;
          pairs.push_back({{"dom", a}, {"cod", b}, {"count", n}});
        }
      return emit(json{{"pairs", pairs}, {"total", total}}, true,
                  std::to_string(total) + " morphisms counted");
    }));
  }

  // ---- mod -------------------------------------------------------------------
  auto* mod = app.add_subcommand("mod", "model categories and colimits");
  {
    auto* build = mod->add_subcommand("build", "build a model category bundle");
    static std::string theory_path, out_dir;
    static int max_size = 3;
    static bool strong = false;
    build->add_option("--theory", theory_path)->required();
    build->add_option("--max-size", max_size);
    build->add_flag("--strong", strong);
    build->add_option("--out", out_dir)->required();
    build->callback(run([&]() {
      Theory t = theory_from_json(read_file(theory_path));
      ModelCategory mc = build_model_category(t, max_size, strong, global_caps().max_model_size);
      write_bundle(mc, out_dir);
      return emit(json{{"objects", mc.models.size()},
                       {"morphisms", mc.cat->morphisms.size()},
                       {"dir", out_dir}},
                  true,
                  std::to_string(mc.models.size()) + " objects, " +
                      std::to_string(mc.cat->morphisms.size()) + " morphisms");
    }));

    auto* coeq = mod->add_subcommand("coeq", "coequalizer of a parallel pair");
    static std::string f_path, g_path, verify_theory;
    static int verify_max = 0;
    coeq->add_option("--f", f_path)->required();
    coeq->add_option("--g", g_path)->required();
    coeq->add_option("--verify-theory", verify_theory,
                     "brute-force the universal property against these models");
    coeq->add_option("--verify-max-size", verify_max);
    coeq->callback(run([&]() {
      Homomorphism f = homomorphism_from_json(read_file(f_path));
      Homomorphism g = homomorphism_from_json(read_file(g_path));
      CoequalizerResult co = coequalizer(f, g);
      json rep{{"quotient", jparse(structure_to_json(co.quotient))},
               {"projection", jparse(homomorphism_to_json(co.projection))}};
      bool ok = true;
      if (!verify_theory.empty()) {
        Theory t = theory_from_json(read_file(verify_theory));
        int cap = verify_max > 0 ? verify_max : static_cast<int>(f.target->total_size());
        std::vector<StructPtr> targets;
        for (auto& m : enumerate_models(t, cap, global_caps().max_model_size))
          targets.push_back(share(std::move(m)));
        auto problems = coequalizer_universal_report(f, g, co, targets);
        rep["universal_ok"] = problems.empty();
        rep["problems"] = problems;
        ok = problems.empty();
      }
      return emit(rep, ok, "quotient has " + std::to_string(co.quotient.total_size()) +
                               " elements");
    }));

    auto* coprod = mod->add_subcommand("coprod", "unary-signature coproduct");
    static std::vector<std::string> factor_paths;
    coprod->add_option("factors", factor_paths, "structure files");
    coprod->callback(run([&]() {
      CoproductResult cp = coproduct_unary(structures_from_paths(factor_paths));
      json inj = json::array();
      for (const auto& h : cp.injections) inj.push_back(jparse(homomorphism_to_json(h)));
      return emit(json{{"sum", jparse(structure_to_json(cp.sum))}, {"injections", inj}}, true,
                  "coproduct of " + std::to_string(factor_paths.size()) + " factors");
    }));

    auto* theta = mod->add_subcommand("theta", "term-algebra expansions");
    static std::string theta_sig;
    theta->add_option("--sig", theta_sig)->required();
    theta->callback(run([&]() {
      Signature sig = signature_from_json(read_file(theta_sig));
      auto family = theta_family(sig, global_caps().theta_expansion_cap);
      json list = json::array();
      for (const auto& m : family) list.push_back(jparse(structure_to_json(m)));
      return emit(json{{"count", family.size()}, {"structures", list}}, true,
                  std::to_string(family.size()) + " expansions");
    }));
  }

  // ---- ultra -----------------------------------------------------------------
  auto* ultra = app.add_subcommand("ultra", "filters, reduced products, Los checks");
  {
    auto* filters = ultra->add_subcommand("filters", "enumerate ultrafilters");
    static int fsize = 2;
    filters->add_option("--size", fsize)->required();
    filters->callback(run([&]() {
      std::vector<int> x;
      for (int i = 0; i < fsize; ++i) x.push_back(i);
      auto us = enumerate_ultrafilters(x);
      json list = json::array();
      for (const auto& u : us) list.push_back(jparse(filter_to_json(u)));
      return emit(json{{"count", us.size()}, {"filters", list}}, true,
                  std::to_string(us.size()) + " ultrafilters");
    }));

    static std::vector<std::string> rp_factors;
    static std::string rp_filter;
    static int rp_ultra_at = -1;
    static bool rp_trivial = false;
    auto add_filter_flags = [&](CLI::App* cmd) {
      cmd->add_option("--filter", rp_filter, "filter JSON file");
      cmd->add_option("--ultra-at", rp_ultra_at, "principal ultrafilter at this index");
      cmd->add_flag("--trivial", rp_trivial, "the trivial filter {X} (direct product)");
    };

    auto* rprod = ultra->add_subcommand("rprod", "reduced product");
    rprod->add_option("factors", rp_factors)->required();
    add_filter_flags(rprod);
    rprod->callback(run([&]() {
      auto ms = structures_from_paths(rp_factors);
      FilterOnX f = filter_from_flags(rp_filter, rp_trivial ? -1 : rp_ultra_at,
                                      static_cast<int>(ms.size()));
      ReducedProduct rp = reduced_product(ms, f);
      return emit(jparse(structure_to_json(rp.quotient)), true,
                  "carrier classes: " + std::to_string(rp.quotient.total_size()));
    }));

    auto* los = ultra->add_subcommand("los", "transfer check for one sentence");
    static std::vector<std::string> los_factors;
    static std::string los_formula;
    static int los_depth_cap = 3;
    los->add_option("factors", los_factors)->required();
    add_filter_flags(los);
    los->add_option("--formula", los_formula)->required();
    los->add_option("--depth-cap", los_depth_cap);
    los->callback(run([&]() {
      auto ms = structures_from_paths(los_factors);
      FilterOnX u = filter_from_flags(rp_filter, rp_ultra_at, static_cast<int>(ms.size()));
      Formula sentence = parse_formula(los_formula, ms[0]->sig);
      LosReport r = los_verify(ms, u, sentence, los_depth_cap);
      json rep{{"product_truth", r.product_truth},
               {"truth_set", std::vector<int>(r.truth_set.begin(), r.truth_set.end())},
               {"almost_everywhere", r.almost_everywhere},
               {"ok", r.ok}};
      return emit(rep, r.ok, r.ok ? "transfer holds" : "transfer violated");
    }));

    auto* diag = ultra->add_subcommand("diag", "diagonal embedding into an ultrapower");
    static std::string diag_struct;
    static int diag_x = 2;
    diag->add_option("--structure", diag_struct)->required();
    add_filter_flags(diag);
    diag->add_option("--x-size", diag_x, "index set size when no filter file given");
    diag->callback(run([&]() {
      auto m = share(structure_from_json(read_file(diag_struct)));
      FilterOnX u = filter_from_flags(rp_filter, rp_ultra_at, diag_x);
      DiagonalEmbedding d = diagonal_embedding(m, u);
      return emit(json{{"power", jparse(structure_to_json(d.power.quotient))},
                       {"embedding", jparse(homomorphism_to_json(d.embedding))},
                       {"injective", injective(d.embedding)}},
                  true, "diagonal embedding built");
    }));

    auto* embed = ultra->add_subcommand("embed", "ultrapower of a bundle into structures");
    static std::string embed_bundle;
    static int embed_x = 2;
    embed->add_option("--bundle", embed_bundle)->required();
    add_filter_flags(embed);
    embed->add_option("--x-size", embed_x);
    embed->callback(run([&]() {
      ModelCategory mc = read_bundle(embed_bundle);
      FilterOnX u = filter_from_flags(rp_filter, rp_ultra_at, embed_x);
      UltrapowerEmbedding emb = ultrapower_embedding(mc, u);
      json rep{{"objects", emb.ultrapower ? emb.ultrapower->objects.size() : 0},
               {"morphisms", emb.ultrapower ? emb.ultrapower->morphisms.size() : 0},
               {"problems", emb.problems}};
      return emit(rep, emb.problems.empty(),
                  emb.problems.empty() ? "embedding verified" : emb.problems.front());
    }));
  }

  // ---- homotopic ----------------------------------------------------------------
  auto* homot = app.add_subcommand("homotopic", "equality-free logic over categories");
  {
    auto* heval = homot->add_subcommand("eval", "evaluate a homotopic sentence");
    static std::string he_cat, he_formula;
    heval->add_option("--category", he_cat)->required();
    heval->add_option("--formula", he_formula)->required();
    heval->callback(run([&]() {
      CatPtr c = share(category_from_json(read_file(he_cat)));
      Formula f = parse_formula(he_formula, lhomo_signature(), {false, {}});
      bool value = eval_homotopic(*c, build_isograph(c), f);
      return emit(json{{"value", value}}, value, value ? "true" : "false");
    }));

    auto* hqlim = homot->add_subcommand("qlim", "quasi-limit existence");
    static std::string ql_cat, ql_diagram;
    hqlim->add_option("--category", ql_cat)->required();
    hqlim->add_option("--diagram", ql_diagram)->required();
    hqlim->callback(run([&]() {
      CatPtr c = share(category_from_json(read_file(ql_cat)));
      check_category_cap(*c);
      Diagram d = diagram_from_json(read_file(ql_diagram), c);
      bool holds = qlim_holds(*c, build_isograph(c), d);
      return emit(json{{"holds", holds}}, holds, holds ? "quasi-limit exists" : "none");
    }));

    auto* agree = homot->add_subcommand("agree", "homotopic sentence agreement");
    static std::string ag_cat, ag_other;
    static int ag_depth = 2, ag_size = 9;
    static std::uint64_t ag_budget = 100000;
    agree->add_option("--category", ag_cat)->required();
    agree->add_option("--other", ag_other)->required();
    agree->add_option("--depth", ag_depth);
    agree->add_option("--size", ag_size);
    agree->add_option("--budget", ag_budget);
    agree->callback(run([&]() {
      CatPtr c = share(category_from_json(read_file(ag_cat)));
      CatPtr d = share(category_from_json(read_file(ag_other)));
      check_category_cap(*c);
      check_category_cap(*d);
      AgreementReport rep = agreement_test(c, d, ag_depth, ag_size, ag_budget, seed);
      json certs = json::array();
      Signature sig = lhomo_signature();
      for (const auto& cert : rep.mismatches) {
        json chosen_c = json::array(), chosen_d = json::array();
        for (const auto& [pair, m] : build_isograph(c).chosen)
          chosen_c.push_back({pair.first, pair.second, m});
        for (const auto& [pair, m] : build_isograph(d).chosen)
          chosen_d.push_back({pair.first, pair.second, m});
        certs.push_back({{"sentence", print_formula(cert.sentence, sig)},
                         {"valueC", cert.value_c},
                         {"valueD", cert.value_d},
                         {"isographs", {{"C", chosen_c}, {"D", chosen_d}}}});
      }
      json out{{"space", rep.space},
               {"checked", rep.checked},
               {"exhaustive", rep.exhaustive},
               {"mismatches", certs}};
      return emit(out, rep.mismatches.empty(),
                  rep.mismatches.empty()
                      ? "agree on " + std::to_string(rep.checked) + " sentences"
                      : std::to_string(rep.mismatches.size()) + " disagreements");
    }));

    auto* translate = homot->add_subcommand("translate", "category-language to homotopic");
    static std::string tr_formula;
    translate->add_option("--formula", tr_formula)->required();
    translate->callback(run([&]() {
      Formula f = parse_formula(tr_formula, lcat_signature());
      Formula t = translate_lcat(f);
      return emit(json{{"formula", print_formula(t, lhomo_signature())}}, true, "translated");
    }));

    auto* isograph = homot->add_subcommand("isograph", "build or extend iso-graphs");
    static std::string ig_cat;
    static std::vector<int> ig_seed;
    isograph->add_option("--category", ig_cat)->required();
    isograph->add_option("--extends", ig_seed, "morphism ids to extend");
    isograph->callback(run([&]() {
      CatPtr c = share(category_from_json(read_file(ig_cat)));
      if (!ig_seed.empty()) {
        bool ok = extends_to_isograph(c, ig_seed);
        return emit(json{{"extends", ok}}, ok, ok ? "extends" : "does not extend");
      }
      IsoGraph g = build_isograph(c);
      json chosen = json::array();
      for (const auto& [pair, m] : g.chosen) chosen.push_back({pair.first, pair.second, m});
      auto problems = validate_isograph(g);
      return emit(json{{"chosen", chosen}, {"problems", problems}}, problems.empty(),
                  std::to_string(g.chosen.size()) + " chosen arrows");
    }));
  }

  // ---- ab --------------------------------------------------------------------
  auto* ab = app.add_subcommand("ab", "group-arrow axioms");
  {
    auto* check = ab->add_subcommand("check", "per-axiom report");
    static std::string ck_path;
    check->add_option("category", ck_path)->required();
    check->callback(run([&]() {
      AbReport rep = check_ab(category_from_json(read_file(ck_path)));
      json missing = json::array();
      for (auto [a, b] : rep.missing_products) missing.push_back({a, b});
      json counts = json::object();
      for (auto [o, n] : rep.group_arrow_counts) counts[std::to_string(o)] = n;
      json out{{"products", rep.products},
               {"missing_products", missing},
               {"null_object", rep.null_object},
               {"generator", rep.generator},
               {"group_arrow_counts", counts},
               {"ab1", rep.ab1},
               {"ab2", rep.ab2},
               {"notes", rep.notes},
               {"verdict", rep.verdict}};
      return emit(out, rep.verdict, rep.verdict ? "all axioms hold" : "some axiom fails");
    }));

    auto* extract = ab->add_subcommand("extract", "hom-functor groups at a generator");
    static std::string ex_path;
    static int ex_gen = 0;
    extract->add_option("category", ex_path)->required();
    extract->add_option("--generator", ex_gen)->required();
    extract->callback(run([&]() {
      ExtractedGroups ex = extract_groups(category_from_json(read_file(ex_path)), ex_gen);
      json groups = json::object();
      for (const auto& [o, g] : ex.groups)
        groups[std::to_string(o)] = jparse(structure_to_json(g));
      return emit(json{{"groups", groups}}, true,
                  std::to_string(ex.groups.size()) + " groups extracted");
    }));

    auto* arrows = ab->add_subcommand("arrows", "group arrows on a concrete abelian group");
    static std::string ar_path;
    arrows->add_option("group", ar_path)->required();
    arrows->callback(run([&]() {
      FinStructure g = structure_from_json(read_file(ar_path));
      auto ops = concrete_group_arrows(g);
      json tables = json::array();
      for (const auto& op : ops) {
        json rows = json::array();
        for (const auto& [ab2, v] : op) rows.push_back({ab2.first, ab2.second, v});
        tables.push_back(std::move(rows));
      }
      return emit(json{{"count", ops.size()}, {"tables", tables}}, true,
                  std::to_string(ops.size()) + " operations pass the axioms");
    }));
  }

  // global options (--format, --seed) may appear after any subcommand
  std::function<void(CLI::App*)> allow_fallthrough = [&](CLI::App* a) {
    a->fallthrough(true);
    for (auto* sub : a->get_subcommands({})) allow_fallthrough(sub);
  };
  for (auto* sub : app.get_subcommands({})) allow_fallthrough(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
