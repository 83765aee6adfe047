#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include "kl/jsonio.hpp"

using namespace kl;

namespace {

struct Options {
  std::string format = "text";
  int jobs = 0;  // 0 = hardware
  size_t budget = 1000000;
};

void emit(const Options& opt, const json& j, const std::string& text) {
  if (opt.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

std::string boxes_str(const std::vector<Box>& boxes) {
  std::string s = "{";
  for (size_t i = 0; i < boxes.size(); ++i) {
    if (i) s += ", ";
    s += "(" + std::to_string(boxes[i].row) + "," + std::to_string(boxes[i].col) + ")";
  }
  return s + "}";
}

int effective_jobs(const Options& opt) {
  if (opt.jobs > 0) return opt.jobs;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? int(hw) : 1;
}

// tiny structural cache for kostant-kumar results
json poly_to_cache(const Polynomial& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) {
    json mono = json::array();
    for (const auto& [v, e] : m.factors())
      mono.push_back({int(v.kind), v.a, v.b, e});
    terms.push_back({{"c", c.get_str()}, {"m", mono}});
  }
  return terms;
}

Polynomial poly_from_cache(const json& terms) {
  Polynomial p;
  for (const json& t : terms) {
    std::vector<std::pair<Var, int>> factors;
    for (const json& f : t["m"]) {
      Var v{VarKind(f[0].get<int>()), int16_t(f[1].get<int>()), int16_t(f[2].get<int>())};
      factors.push_back({v, f[3].get<int>()});
    }
    p += Polynomial::term(Monomial(std::move(factors)), Rat(t["c"].get<std::string>()));
  }
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kazhdan-Lusztig ideals, pipe dreams and Schubert multiplicities"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  if (const char* env = std::getenv("KL_BUDGET")) opt.budget = std::strtoull(env, nullptr, 10);
  app.add_option("--format", opt.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--jobs", opt.jobs, "worker count for sweeps (0 = hardware)");
  app.add_option("--budget", opt.budget, "S-pair / reduction step budget");

  std::string arg_v, arg_w, arg_target, cache_dir;
  bool ascii = false, strands = false, reduced = false, all_minors = false;
  bool zmatrix = false, groth = false, dot = false, sweep_all = false, per_pair = false;
  int n_opt = 4;
  size_t random_count = 0, sample_count = 0, trials = 2000;
  uint64_t seed = 1;

  auto* c_diagram = app.add_subcommand("diagram", "Rothe diagram, essential set, labels");
  c_diagram->add_option("v", arg_v)->required();
  c_diagram->add_flag("--ascii", ascii);

  auto* c_essential = app.add_subcommand("essential", "essential set of a permutation");
  c_essential->add_option("v", arg_v)->required();

  auto* c_matrix = app.add_subcommand("matrix", "rank matrix (or Z^(v) with --zmatrix)");
  c_matrix->add_option("w", arg_w)->required();
  c_matrix->add_flag("--zmatrix", zmatrix);

  auto* c_minors = app.add_subcommand("minors", "essential minors of I_{v,w}");
  c_minors->add_option("v", arg_v)->required();
  c_minors->add_option("w", arg_w)->required();
  c_minors->add_flag("--all-minors", all_minors);

  auto* c_groebner = app.add_subcommand("groebner", "Buchberger verification");
  c_groebner->add_option("v", arg_v);
  c_groebner->add_option("w", arg_w);
  c_groebner->add_flag("--all", sweep_all, "sweep all of Gamma_n");
  c_groebner->add_option("--n", n_opt);
  c_groebner->add_option("--random", random_count, "seeded random Gamma_n pairs");
  c_groebner->add_option("--seed", seed);

  auto* c_initial = app.add_subcommand("initial", "initial ideal and its prime decomposition");
  c_initial->add_option("v", arg_v)->required();
  c_initial->add_option("w", arg_w)->required();

  auto* c_complex = app.add_subcommand("complex", "pipe complex: facets, interior, topology");
  c_complex->add_option("v", arg_v)->required();
  c_complex->add_option("w", arg_w)->required();
  c_complex->add_flag("--dot", dot, "DOT facet-ridge graph");

  auto* c_pipes = app.add_subcommand("pipes", "pipe dreams on D(v) for a target");
  c_pipes->add_option("v", arg_v)->required();
  c_pipes->add_option("target", arg_target)->required();
  c_pipes->add_flag("--reduced", reduced);
  c_pipes->add_flag("--ascii", ascii);
  c_pipes->add_flag("--strands", strands);

  auto* c_gpoly = app.add_subcommand("gpoly", "unspecialized Grothendieck polynomial");
  c_gpoly->add_option("v", arg_v)->required();
  c_gpoly->add_option("w", arg_w)->required();

  auto* c_spoly = app.add_subcommand("spoly", "unspecialized Schubert polynomial");
  c_spoly->add_option("v", arg_v)->required();
  c_spoly->add_option("w", arg_w)->required();

  auto* c_double = app.add_subcommand("double", "double Schubert/Grothendieck polynomial");
  c_double->add_option("w", arg_w)->required();
  c_double->add_flag("--groth", groth);

  auto* c_specialize = app.add_subcommand("specialize", "Buch-Rimanyi specialization triples");
  c_specialize->add_option("v", arg_v)->required();
  c_specialize->add_option("w", arg_w)->required();

  auto* c_kk = app.add_subcommand("kk", "Kostant-Kumar K-polynomial");
  c_kk->add_option("v", arg_v)->required();
  c_kk->add_option("w", arg_w)->required();
  c_kk->add_option("--cache-dir", cache_dir);

  auto* c_mult = app.add_subcommand("mult", "Schubert multiplicity pipeline");
  c_mult->add_option("v", arg_v)->required();
  c_mult->add_option("w", arg_w)->required();

  auto* c_vmax = app.add_subcommand("vmax", "double coset maximum");
  c_vmax->add_option("v", arg_v)->required();
  c_vmax->add_option("w", arg_w)->required();

  auto* c_homog = app.add_subcommand("homog", "standard homogeneity test");
  c_homog->add_option("v", arg_v)->required();
  c_homog->add_option("w", arg_w)->required();

  auto* c_gamma = app.add_subcommand("gamma", "Gamma_n statistics and Conjecture probe");
  c_gamma->add_option("--n", n_opt)->required();
  c_gamma->add_option("--sample", sample_count, "sample size (default exhaustive)");
  c_gamma->add_option("--seed", seed);
  c_gamma->add_flag("--per-pair", per_pair, "CSV per-pair rows");

  auto* c_sample = app.add_subcommand("sample", "Monte Carlo success estimate");
  c_sample->add_option("--n", n_opt)->required();
  c_sample->add_option("--trials", trials);
  c_sample->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*c_diagram || *c_essential) {
      Permutation v = Permutation::parse(arg_v);
      json j = cmd_diagram(v);
      std::string text;
      if (*c_essential) {
        text = "essential set: " + boxes_str(essential_set(v)) + "\n";
      } else {
        if (ascii) text += render_diagram(v, true);
        text += "boxes: " + boxes_str(rothe_diagram(v)) + "\n";
        text += "essential set: " + boxes_str(essential_set(v)) + "\n";
        std::string word;
        for (const LabeledBox& lb : canonical_labeling(v))
          word += (word.empty() ? "" : ",") + std::to_string(lb.label);
        text += "canonical word: (" + word + ")\n";
      }
      emit(opt, j, text);
      return 0;
    }

    if (*c_matrix) {
      Permutation w = Permutation::parse(arg_w);
      if (zmatrix) {
        emit(opt, cmd_zmatrix(w), SpecializedMatrix(w).str());
      } else {
        RankMatrix r(w);
        std::string text;
        for (int i = w.n(); i >= 1; --i) {
          for (int j = 1; j <= w.n(); ++j)
            text += std::to_string(r.at(i, j)) + (j == w.n() ? "" : " ");
          text += "\n";
        }
        emit(opt, cmd_rank_matrix(w), text);
      }
      return 0;
    }

    if (*c_minors) {
      Permutation v = Permutation::parse(arg_v), w = Permutation::parse(arg_w);
      GeneratorSet g = essential_minors(v, w, all_minors);
      std::string text;
      for (const Polynomial& p : g.minors) text += p.str() + "\n";
      text += "(" + std::to_string(g.minors.size()) + " generators, " +
              std::to_string(g.zero_minors_dropped) + " zero minors dropped, " +
              std::to_string(g.duplicates_dropped) + " duplicates dropped)\n";
      emit(opt, cmd_minors(g), text);
      return 0;
    }

    if (*c_groebner) {
      if (sweep_all || random_count > 0) {
        std::vector<std::pair<Permutation, Permutation>> pairs;
        if (sweep_all) {
          pairs = gamma_pairs(n_opt);
        } else {
          Rng rng(seed);
          for (size_t k = 0; k < random_count; ++k) {
            for (;;) {
              ComparableSample s = sample_comparable_pair(n_opt, rng);
              if (!(s.lo == s.hi)) {
                pairs.push_back({s.lo, s.hi});
                break;
              }
            }
          }
        }
        json failures = json::array();
        for (auto& [v, w] : pairs) {
          GeneratorSet g = essential_minors(v, w);
          BuchbergerReport rep = buchberger_verify(g, opt.budget);
          if (!rep.is_groebner) failures.push_back({{"v", v.str()}, {"w", w.str()}});
        }
        bool all_ok = failures.empty();
        json j = {{"command", "groebner_sweep"},
                  {"n", n_opt},
                  {"pairs", pairs.size()},
                  {"all_groebner", all_ok},
                  {"failures", failures}};
        std::string text = all_ok
                               ? "all " + std::to_string(pairs.size()) + " Gamma_" +
                                     std::to_string(n_opt) + " pairs Groebner-verified\n"
                               : "GROEBNER FAILURES: " + failures.dump() + "\n";
        emit(opt, j, text);
        return all_ok ? 0 : 3;
      }
      if (arg_v.empty() || arg_w.empty())
        throw CLI::ValidationError("groebner", "needs v w or --all/--random");
      Permutation v = Permutation::parse(arg_v), w = Permutation::parse(arg_w);
      GeneratorSet g = essential_minors(v, w);
      BuchbergerReport rep = buchberger_verify(g, opt.budget);
      std::string text = std::string("is_groebner: ") + (rep.is_groebner ? "true" : "false") +
                         " (" + std::to_string(rep.spairs_checked) + " S-pairs reduced, " +
                         std::to_string(rep.spairs_skipped_coprime) + " coprime skips)\n";
      emit(opt, cmd_groebner(g, rep), text);
      return rep.is_groebner ? 0 : 3;
    }

    if (*c_initial) {
      Permutation v = Permutation::parse(arg_v), w = Permutation::parse(arg_w);
      json j = cmd_initial(v, w);
      std::string text = "in_< I = <";
      for (size_t i = 0; i < j["leading_term_ideal"].size(); ++i)
        text += (i ? ", " : "") + j["leading_term_ideal"][i].get<std::string>();
      text += ">\nminimal primes: " + std::to_string(j["minimal_primes"].size()) +
              "\nprimes match RedPipes cross-sets: " +
              (j["primes_match_redpipes"].get<bool>() ? "yes" : "NO") +
              "\nStanley-Reisner ideal matches: " +
              (j["ideals_match"].get<bool>() ? "yes" : "NO") + "\n";
      emit(opt, j, text);
      return (j["primes_match_redpipes"].get<bool>() && j["ideals_match"].get<bool>()) ? 0 : 3;
    }

    if (*c_complex) {
      Permutation v = Permutation::parse(arg_v), w = Permutation::parse(arg_w);
      PipeComplex c(v, w);
      TopologyReport topo = topology_check(c);
      if (dot) {
        std::cout << facet_ridge_dot(c);
        return 0;
      }
      json j = cmd_complex(c, topo);
      std::string text = "facets: " + std::to_string(c.facets().size()) +
                         ", interior faces: " + std::to_string(c.interior_faces().size()) +
                         "\ntopology: " + j["topology"].get<std::string>() +
                         ", dimension " + std::to_string(topo.dimension) + "\n";
      emit(opt, j, text);
      return 0;
    }

    if (*c_pipes) {
      Permutation v = Permutation::parse(arg_v), t = Permutation::parse(arg_target);
      auto dreams = enumerate_pipes(v, t, reduced);
      std::string text;
      for (const PipeDream& p : dreams) {
        if (ascii) text += render_dream(p) + "\n";
        else text += boxes_str(p.crosses) + "\n";
        if (strands) text += render_strands(flatten(p)) + "\n";
      }
      text += std::to_string(dreams.size()) + (reduced ? " reduced" : "") + " pipe dreams\n";
      emit(opt, cmd_pipes(v, t, reduced, dreams), text);
      return 0;
    }

    if (*c_gpoly || *c_spoly) {
      Permutation v = Permutation::parse(arg_v), w = Permutation::parse(arg_w);
      bool g = bool(*c_gpoly);
      Polynomial p = g ? unspecialized_grothendieck(v, w) : unspecialized_schubert(v, w);
      std::string text = p.str() + "\n";
      if (g && !p.is_zero()) {
        // product-form face expansion
        PipeComplex c(v, w);
        int codim = c.target().length();
        for (const Face& f : c.interior_faces()) {
          std::string line = ((f.label.size() - codim) % 2 == 0) ? "+ " : "- ";
          for (const Box& b : f.label.crosses)
            line += "(1-t" + std::to_string(b.row) + std::to_string(b.col) + ")";
          text += line + "\n";
        }
      }
      emit(opt, cmd_poly_result(g ? "gpoly" : "spoly", v, w, p), text);
      return 0;
    }

    if (*c_double) {
      Permutation w = Permutation::parse(arg_w);
      Polynomial p = groth ? double_grothendieck(w) : double_schubert(w);
      Polynomial oracle = groth ? divided_difference_grothendieck(w) : divided_difference_schubert(w);
      if (p != oracle) throw TheoryViolation("double polynomial disagrees with the oracle");
      emit(opt, cmd_double(w, groth, p), p.str() + "\n");
      return 0;
    }

    if (*c_specialize) {
      Permutation v = Permutation::parse(arg_v), w = Permutation::parse(arg_w);
      BuchRimanyiResult r = specialize_buch_rimanyi(v, w);
      std::string text = "Grothendieck triple equal: " +
                         std::string(r.groth.all_equal() ? "yes" : "NO") + "\n  " +
                         r.groth.from_kpoly.str() + "\nSchubert triple equal: " +
                         std::string(r.schub.all_equal() ? "yes" : "NO") + "\n  " +
                         r.schub.from_kpoly.str() + "\n";
      emit(opt, cmd_specialize(v, w, r), text);
      return (r.groth.all_equal() && r.schub.all_equal()) ? 0 : 3;
    }

    if (*c_kk) {
      Permutation v = Permutation::parse(arg_v), w = Permutation::parse(arg_w);
      std::string key = v.str() + "|" + w.str();
      json cache;
      std::filesystem::path cache_file;
      if (!cache_dir.empty()) {
        cache_file = std::filesystem::path(cache_dir) / "kk-cache.json";
        if (std::ifstream in{cache_file}; in) in >> cache;
        if (cache.contains(key)) {
          Polynomial p = poly_from_cache(cache[key]);
          emit(opt, cmd_poly_result("kk", v, w, p), p.str() + "\n");
          return 0;
        }
      }
      Polynomial p = kostant_kumar(v, w);
      if (!cache_dir.empty()) {
        // TODO: lock the cache file; concurrent kk runs sharing --cache-dir
        // can drop each other's entries
        std::filesystem::create_directories(cache_dir);
        cache[key] = poly_to_cache(p);
        std::ofstream out{cache_file};
        out << cache.dump();
      }
      emit(opt, cmd_poly_result("kk", v, w, p), p.str() + "\n");
      return 0;
    }

    if (*c_mult) {
      Permutation v = Permutation::parse(arg_v), w = Permutation::parse(arg_w);
      MultiplicityOutcome o = multiplicity(v, w);
      std::string text = "route: " + to_string(o.route) + "\n";
      if (o.value) text += "multiplicity: " + o.value->get_str() + "\n";
      text += "v_used: " + o.v_used.str() + "\n";
      if (o.facet_count) text += "facet count: " + std::to_string(*o.facet_count) + "\n";
      emit(opt, cmd_mult(v, w, o), text);
      return 0;
    }

    if (*c_vmax) {
      Permutation v = Permutation::parse(arg_v), w = Permutation::parse(arg_w);
      Permutation vm = v_max(v, w);
      emit(opt, cmd_vmax(v, w, vm), vm.str() + "\n");
      return 0;
    }

    if (*c_homog) {
      Permutation v = Permutation::parse(arg_v), w = Permutation::parse(arg_w);
      GeneratorSet red = interreduce(essential_minors(v, w), opt.budget);
      bool homog = true;
      for (const Polynomial& p : red.minors)
        if (!p.is_homogeneous()) homog = false;
      std::string text = std::string(homog ? "standardly homogeneous" : "NOT standardly homogeneous") + "\n";
      for (const Polynomial& p : red.minors) text += "  " + p.str() + "\n";
      emit(opt, cmd_homog(v, w, homog, red), text);
      return 0;
    }

    if (*c_gamma) {
      std::optional<std::pair<size_t, uint64_t>> sample;
      if (sample_count > 0) sample = {sample_count, seed};
      GammaReport rep = gamma_statistics(n_opt, sample, effective_jobs(opt), opt.budget);
      std::string text;
      if (per_pair && opt.format == "text") {
        // CSV rows: recomputation is cheap relative to the sweep itself
        text += "v,w,route,value,facet_count,homog_direct,homog_vmax\n";
        for (auto& [v, w] : gamma_pairs(n_opt)) {
          MultiplicityOutcome o = multiplicity(v, w);
          bool d = o.route == MultRoute::DirectHomogeneous;
          bool m = o.route == MultRoute::ViaVmax;
          text += v.str() + "," + w.str() + "," + to_string(o.route) + "," +
                  (o.value ? o.value->get_str() : "unresolved") + "," +
                  (o.facet_count ? std::to_string(*o.facet_count) : "") + "," +
                  (d ? "1" : "0") + "," + (m ? "1" : "0") + "\n";
        }
      }
      text += "|Gamma_" + std::to_string(n_opt) + "| = " + std::to_string(rep.pairs) + "\n";
      char buf[160];
      std::snprintf(buf, sizeof buf,
                    "route (1): %.1f%%   routes (1)+(2): %.1f%%   budget-excluded: %zu\n",
                    rep.pct_route1, rep.pct_route12, rep.budget_exceeded);
      text += buf;
      text += "Conjecture instances tested: " + std::to_string(rep.conjecture_instances) +
              ", counterexamples: " + std::to_string(rep.conjecture_counterexamples.size()) + "\n";
      emit(opt, cmd_gamma(rep), text);
      return rep.conjecture_counterexamples.empty() ? 0 : 3;
    }

    if (*c_sample) {
      TrialConfig cfg;
      cfg.n = n_opt;
      cfg.trials = trials;
      cfg.seed = seed;
      cfg.budget = opt.budget;
      cfg.jobs = effective_jobs(opt);
      EstimateReport rep = estimate_success(cfg);
      char buf[200];
      std::snprintf(buf, sizeof buf,
                    "n=%d trials=%zu success=%.1f%% CI95=[%.1f, %.1f] mean rejections=%.1f\n",
                    cfg.n, cfg.trials, rep.pct, rep.ci_lo, rep.ci_hi, rep.mean_rejections);
      emit(opt, cmd_sample(rep), buf);
      return 0;
    }
  } catch (const TheoryViolation& e) {
    std::cerr << "theory violation: " << e.what() << "\n";
    return 3;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
