// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Command line front end. Exit codes: 0 ok, 1 operational error,
// 2 acceptance failure, 3 invariant violation.

#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "submax/accept.hpp"
#include "submax/bench.hpp"
#include "submax/errors.hpp"
#include "submax/objectives.hpp"
#include "submax/solvers.hpp"

namespace {

using namespace submax;

std::string fmt_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

struct SolveArgs {
  std::string instance;
  std::string solver;
  std::size_t k = 1;
  double eps = 0.2;
  std::optional<std::size_t> m;
  std::string mode;
  std::optional<std::size_t> r;
  std::optional<std::size_t> round_cap;
  std::uint64_t seed = 0;
  double delta = 0.05;
  std::string v_star;  // "opt" or a number; empty when unused
};

int run_solve(const SolveArgs& args) {
  std::unique_ptr<ValueOracle> oracle = load_instance(args.instance);
  SolverKind kind = solver_kind_from_name(args.solver);

  SolverConfig cfg;
  cfg.k = args.k;
  cfg.eps = args.eps;
  cfg.m = args.m;
  cfg.r = args.r;
  cfg.round_cap = args.round_cap;
  cfg.seed = args.seed;
  cfg.delta = args.delta;
  if (!args.mode.empty()) {
    if (args.mode == "exact") {
      cfg.mode = Mode::exact;
    } else if (args.mode == "sampled") {
      cfg.mode = Mode::sampled;
    } else {
      throw InvalidArgumentError("--mode must be exact or sampled");
    }
  } else if (cfg.m) {
    cfg.mode = Mode::sampled;
  }

  double v_star = 0.0;
  bool needs_guess = kind == SolverKind::iterative_filtering ||
                     kind == SolverKind::amortized_filtering ||
                     kind == SolverKind::amortized_filtering_proxy;
  if (needs_guess) {
    if (args.v_star.empty()) {
      throw InvalidArgumentError(
          "--v-star is required for " + args.solver +
          " (a number, or 'opt' for the brute-force optimum)");
    }
    if (args.v_star == "opt") {
      v_star = brute_force_opt(*oracle, cfg.k).second;
    } else {
      try {
        v_star = std::stod(args.v_star);
      } catch (const std::exception&) {
        throw InvalidArgumentError("--v-star must be a number or 'opt'");
      }
    }
  }

  RunResult res;
  switch (kind) {
    case SolverKind::greedy:
      res = greedy(*oracle, cfg.k);
      break;
    case SolverKind::lazy_greedy:
      res = lazy_greedy(*oracle, cfg.k);
      break;
    case SolverKind::random_baseline:
      res = random_baseline(*oracle, cfg.k, cfg.seed);
      break;
    case SolverKind::iterative_filtering:
      res = iterative_filtering(*oracle, cfg, v_star);
      break;
    case SolverKind::amortized_filtering:
      res = amortized_filtering(*oracle, cfg, v_star);
      break;
    case SolverKind::amortized_filtering_proxy:
      res = amortized_filtering_proxy(*oracle, cfg, v_star);
      break;
    case SolverKind::amortized_filtering_full:
      res = amortized_filtering_full(*oracle, cfg);
      break;
  }

  std::cout << "solver " << args.solver << " value " << fmt_value(res.value)
            << " rounds " << res.ledger.rounds() << " queries "
            << res.ledger.total_queries() << " solution [";
  bool first = true;
  for (ElementId id : res.solution) {
    if (!first) std::cout << ", ";
    std::cout << id;
    first = false;
  }
  std::cout << "]\n";
  if (res.truncated) std::cout << "truncated: hit the round cap\n";
  if (!res.warning.empty()) std::cout << "warning: " << res.warning << "\n";
  return 0;
}

int run_bench(const std::string& config_path, const std::string& out,
              const std::string& format, bool keep_going) {
  ExperimentConfig config = load_experiment_config(config_path);
  if (keep_going) config.keep_going = true;
  if (!format.empty()) {
    if (format != "csv" && format != "json") {
      throw InvalidArgumentError("--format must be csv or json");
    }
    config.format = format;
  }
  std::vector<ReportRow> rows = run_experiment(config);
  write_report(rows, config, out);
  std::string path = out.empty() ? config.output : out;
  std::cout << "wrote " << rows.size() << " rows to " << path << "\n";
  return 0;
}

int run_validate(const std::string& instance, const std::string& mode,
                 std::size_t trials, std::uint64_t seed) {
  std::unique_ptr<ValueOracle> oracle = load_instance(instance);
  ValidateMode vmode;
  if (mode == "exhaustive") {
    vmode = ValidateMode::exhaustive;
  } else if (mode == "sampled") {
    vmode = ValidateMode::sampled;
  } else {
    throw InvalidArgumentError("--mode must be exhaustive or sampled");
  }
  ValidationReport report = validate_submodular(*oracle, vmode, trials, seed);
  if (report.ok()) {
    std::cout << "ok: monotone submodular (" << report.checks << " checks)\n";
    return 0;
  }
  for (const Violation& v : report.violations) {
    std::cout << v.describe() << "\n";
  }
  std::cout << report.violations.size() << " violations in " << report.checks
            << " checks\n";
  return 3;
}

int run_synth(const std::string& kind, ElementId n, std::uint64_t seed,
              const std::string& out, std::int32_t universe,
              std::int32_t clients, double density, double weight_scale,
              double p) {
  std::unique_ptr<ValueOracle> oracle;
  if (kind == "coverage") {
    CoverageSynthParams params;
    params.universe = universe > 0 ? universe : n;
    params.density = density;
    params.weight_scale = weight_scale;
    oracle = synthesize_coverage(n, params, seed);
  } else if (kind == "facility") {
    FacilitySynthParams params;
    params.clients = clients > 0 ? clients : n;
    oracle = synthesize_facility(n, params, seed);
  } else if (kind == "concave_modular") {
    ConcaveModularSynthParams params;
    params.p = p;
    params.weight_scale = weight_scale > 0.0 ? weight_scale : 1.0;
    oracle = synthesize_concave_modular(n, params, seed);
  } else {
    throw InvalidArgumentError(
        "--kind must be coverage, facility, or concave_modular");
  }
  save_instance(*oracle, out);
  std::cout << "wrote " << kind << " n=" << n << " to " << out << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"low-adaptivity monotone submodular maximization toolkit"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand(
      "solve", "run one solver on one instance and print the outcome");
  solve->add_option("--instance", solve_args.instance, "instance file")
      ->required();
  solve->add_option("--solver", solve_args.solver,
                    "greedy|lazy_greedy|random_baseline|iterative_filtering|"
                    "amortized_filtering|amortized_filtering_proxy|"
                    "amortized_filtering_full")
      ->required();
  solve->add_option("--k", solve_args.k, "cardinality bound")->required();
  solve->add_option("--eps", solve_args.eps, "accuracy parameter in (0, 1/2)");
  std::size_t solve_m = 0;
  solve->add_option("--m", solve_m, "samples per estimate (sampled mode)");
  solve->add_option("--mode", solve_args.mode, "exact|sampled");
  std::size_t solve_r = 0;
  solve->add_option("--r", solve_r, "threshold denominator override");
  std::size_t solve_cap = 0;
  solve->add_option("--round-cap", solve_cap, "adaptive round budget");
  solve->add_option("--seed", solve_args.seed, "run seed");
  solve->add_option("--delta", solve_args.delta, "failure probability");
  solve->add_option("--v-star", solve_args.v_star,
                    "value guess for filtering solvers; 'opt' brute-forces it");

  std::string bench_config, bench_out, bench_format;
  bool bench_keep_going = false;
  CLI::App* bench = app.add_subcommand(
      "bench", "run an experiment config and write the report");
  bench->add_option("--config", bench_config, "experiment config file")
      ->required();
  bench->add_option("--out", bench_out, "report path override");
  bench->add_option("--format", bench_format, "csv|json override");
  bench->add_flag("--keep-going", bench_keep_going,
                  "report invariant violations instead of aborting");

  std::string val_instance, val_mode = "exhaustive";
  std::size_t val_trials = 200;
  std::uint64_t val_seed = 0;
  CLI::App* validate = app.add_subcommand(
      "validate", "check an instance for monotone submodularity");
  validate->add_option("--instance", val_instance, "instance file")
      ->required();
  validate->add_option("--mode", val_mode, "exhaustive|sampled");
  validate->add_option("--trials", val_trials, "sampled-mode chain count");
  validate->add_option("--seed", val_seed, "sampled-mode seed");

  std::string synth_kind, synth_out;
  ElementId synth_n = 0;
  std::uint64_t synth_seed = 0;
  std::int32_t synth_universe = 0, synth_clients = 0;
  double synth_density = 0.1, synth_weight_scale = 0.0, synth_p = 0.5;
  CLI::App* synth =
      app.add_subcommand("synth", "write a synthetic instance file");
  synth->add_option("--kind", synth_kind, "coverage|facility|concave_modular")
      ->required();
  synth->add_option("--n", synth_n, "ground set size")->required();
  synth->add_option("--out", synth_out, "output file")->required();
  synth->add_option("--seed", synth_seed, "generator seed");
  synth->add_option("--universe", synth_universe, "coverage universe size");
  synth->add_option("--density", synth_density, "coverage density");
  synth->add_option("--weight-scale", synth_weight_scale,
                    "weight scale (0 keeps unit weights)");
  synth->add_option("--clients", synth_clients, "facility client count");
  synth->add_option("--p", synth_p, "concave exponent in (0, 1]");

  std::string accept_config = "data/bench_example.json";
  int accept_only = 0;
  CLI::App* accept = app.add_subcommand(
      "accept", "run the acceptance suite; nonzero exit on failure");
  accept->add_option("--config", accept_config,
                     "example experiment config for the determinism check");
  accept->add_option("--only", accept_only, "run a single criterion (1-9)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) {
      if (solve->count("--m")) solve_args.m = solve_m;
      if (solve->count("--r")) solve_args.r = solve_r;
      if (solve->count("--round-cap")) solve_args.round_cap = solve_cap;
      return run_solve(solve_args);
    }
    if (bench->parsed()) {
      return run_bench(bench_config, bench_out, bench_format, bench_keep_going);
    }
    if (validate->parsed()) {
      return run_validate(val_instance, val_mode, val_trials, val_seed);
    }
    if (synth->parsed()) {
      return run_synth(synth_kind, synth_n, synth_seed, synth_out,
                       synth_universe, synth_clients, synth_density,
                       synth_weight_scale, synth_p);
    }
    if (accept->parsed()) {
      std::vector<CriterionResult> results =
          run_acceptance(accept_config, std::cout, accept_only);
      if (all_passed(results)) {
        std::cout << "acceptance: all " << results.size()
                  << " criteria passed\n";
        return 0;
      }
      std::cout << "acceptance: FAILED\n";
      return 2;
    }
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
