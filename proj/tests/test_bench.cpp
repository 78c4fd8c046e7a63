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

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "submax/bench.hpp"
#include "submax/errors.hpp"

using namespace submax;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Writes `text` to a unique temp file and returns its path.
class TempFile {
 public:
  explicit TempFile(const std::string& text, const char* tag) {
    path_ = (std::filesystem::temp_directory_path() /
             (std::string("submax_test_") + tag + ".json"))
                .string();
    std::ofstream out(path_, std::ios::binary | std::ios::trunc);
    out << text;
  }
  ~TempFile() { std::remove(path_.c_str()); }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

InstanceSpec canonical_spec() {
  InstanceSpec spec;
  spec.id = "canonical";
  spec.path = "data/canonical_coverage.json";  // tests run from the repo root
  return spec;
}

SolverSpec greedy_spec(std::size_t k) {
  SolverSpec spec;
  spec.id = "greedy";
  spec.kind = SolverKind::greedy;
  spec.config.k = k;
  return spec;
}

}  // namespace

TEST_CASE("the shipped experiment config loads faithfully") {
  ExperimentConfig config = load_experiment_config("data/bench_example.json");
  REQUIRE(config.instances.size() == 3);
  CHECK(config.instances[0].id == "canonical");
  // Relative instance paths resolve against the config file's directory.
  CHECK(config.instances[0].path.find("canonical_coverage.json") !=
        std::string::npos);
  CHECK(std::filesystem::exists(config.instances[0].path));
  CHECK(config.instances[1].kind == "coverage");
  CHECK(config.instances[2].kind == "facility");
  REQUIRE(config.solvers.size() == 5);
  CHECK(config.solvers[0].kind == SolverKind::greedy);
  CHECK(config.solvers[3].kind == SolverKind::amortized_filtering);
  CHECK(config.solvers[3].v_star_is_opt);
  CHECK(config.solvers[4].kind == SolverKind::amortized_filtering_full);
  // m implies sampled mode when no mode is spelled out.
  CHECK(config.solvers[4].config.mode == Mode::sampled);
  CHECK(config.seeds == std::vector<std::uint64_t>{1, 2, 3});
  CHECK(config.output == "bench_report.csv");
  CHECK(config.format == "csv");
  CHECK(config.verify.brute_force);
  CHECK(config.omit_wall_time);
}

TEST_CASE("config parsing rejects malformed input") {
  TempFile unknown(R"({"instances": [{"id": "a", "kind": "coverage", "n": 4}],
                       "solvers": [{"id": "g", "kind": "greedy", "k": 2}],
                       "seeds": [1], "typo_field": true})",
                   "unknown");
  CHECK_THROWS_AS(load_experiment_config(unknown.path()), ParseError);

  TempFile no_solvers(R"({"instances": [{"id": "a", "kind": "coverage",
                          "n": 4}], "solvers": [], "seeds": [1]})",
                      "nosolvers");
  CHECK_THROWS_AS(load_experiment_config(no_solvers.path()), ParseError);

  TempFile bad_format(R"({"instances": [{"id": "a", "kind": "coverage",
                          "n": 4}],
                          "solvers": [{"id": "g", "kind": "greedy", "k": 2}],
                          "seeds": [1], "format": "xml"})",
                      "badformat");
  CHECK_THROWS_AS(load_experiment_config(bad_format.path()), ParseError);

  TempFile bad_guess(R"({"instances": [{"id": "a", "kind": "coverage",
                         "n": 4}],
                         "solvers": [{"id": "it", "kind":
                         "iterative_filtering", "k": 2, "v_star": "auto"}],
                         "seeds": [1]})",
                     "badguess");
  CHECK_THROWS_AS(load_experiment_config(bad_guess.path()), ParseError);

  TempFile not_json("not json at all", "notjson");
  CHECK_THROWS_AS(load_experiment_config(not_json.path()), ParseError);

  CHECK_THROWS_AS(load_experiment_config("/nonexistent/config.json"),
                  InvalidArgumentError);
}

TEST_CASE("run_experiment produces verified, sorted rows") {
  ExperimentConfig config;
  config.instances.push_back(canonical_spec());

  SolverSpec amortized;
  amortized.id = "amortized";
  amortized.kind = SolverKind::amortized_filtering;
  amortized.config.k = 2;
  amortized.config.eps = 0.4;
  amortized.v_star_is_opt = true;

  config.solvers = {greedy_spec(2), amortized};
  config.seeds = {3, 1, 2};
  config.verify.brute_force = true;
  config.omit_wall_time = true;

  std::vector<ReportRow> rows = run_experiment(config);
  REQUIRE(rows.size() == 6);
  // Sorted by (instance, solver, seed) regardless of config order.
  CHECK(rows[0].solver_id == "amortized");
  CHECK(rows[0].seed == 1);
  CHECK(rows[2].seed == 3);
  CHECK(rows[3].solver_id == "greedy");

  for (const ReportRow& row : rows) {
    CAPTURE(row.solver_id);
    CHECK(row.instance_id == "canonical");
    CHECK(row.n == 4);
    CHECK(row.k == 2);
    CHECK(row.value == 6.0);
    REQUIRE(row.opt.has_value());
    CHECK(*row.opt == 6.0);
    REQUIRE(row.ratio.has_value());
    CHECK(*row.ratio == 1.0);
    CHECK_FALSE(row.truncated);
    CHECK(row.wall_ms == 0.0);
  }
  // Guess-free baselines report neither eps nor m.
  CHECK(rows[3].eps == 0.0);
  CHECK(rows[3].m == 0);
  CHECK(rows[3].rounds == 2);
  CHECK(rows[3].total_queries == 9);
  CHECK(rows[0].eps == 0.4);
  CHECK(rows[0].rounds == 2);
}

TEST_CASE("run_experiment rejects inconsistent configs") {
  ExperimentConfig config;
  config.instances = {canonical_spec(), canonical_spec()};  // duplicate id
  config.solvers = {greedy_spec(2)};
  config.seeds = {1};
  CHECK_THROWS_AS(run_experiment(config), InvalidArgumentError);

  ExperimentConfig dup_solver;
  dup_solver.instances = {canonical_spec()};
  dup_solver.solvers = {greedy_spec(2), greedy_spec(2)};
  dup_solver.seeds = {1};
  CHECK_THROWS_AS(run_experiment(dup_solver), InvalidArgumentError);

  // v* = opt needs the brute-force verifier switched on.
  ExperimentConfig no_opt;
  no_opt.instances = {canonical_spec()};
  SolverSpec it;
  it.id = "it";
  it.kind = SolverKind::iterative_filtering;
  it.config.k = 2;
  it.v_star_is_opt = true;
  no_opt.solvers = {it};
  no_opt.seeds = {1};
  CHECK_THROWS_AS(run_experiment(no_opt), InvalidArgumentError);

  // A guess solver with no guess at all is equally unusable.
  SolverSpec bare = it;
  bare.v_star_is_opt = false;
  no_opt.solvers = {bare};
  CHECK_THROWS_AS(run_experiment(no_opt), InvalidArgumentError);
}

TEST_CASE("CSV reports use the frozen header and stable cells") {
  const std::string header =
      "instance,solver,seed,n,k,eps,m,value,opt,ratio,rounds,total_queries,"
      "truncated,wall_ms\n";
  CHECK(report_to_csv({}) == header);

  ExperimentConfig config;
  config.instances = {canonical_spec()};
  config.solvers = {greedy_spec(2)};
  config.seeds = {1};
  config.verify.brute_force = true;
  config.omit_wall_time = true;
  std::string csv = report_to_csv(run_experiment(config));
  CHECK(csv == header + "canonical,greedy,1,4,2,0,0,6,6,1,2,9,0,0\n");

  // Without verification the opt and ratio cells stay empty.
  config.verify.brute_force = false;
  std::string bare = report_to_csv(run_experiment(config));
  CHECK(bare == header + "canonical,greedy,1,4,2,0,0,6,,,2,9,0,0\n");

  // Every line carries exactly the 14 columns the header promises.
  std::stringstream lines(bare);
  std::string line;
  while (std::getline(lines, line)) {
    CHECK(std::count(line.begin(), line.end(), ',') == 13);
  }
}

TEST_CASE("JSON reports round-trip losslessly") {
  ExperimentConfig config;
  config.instances = {canonical_spec()};
  config.solvers = {greedy_spec(2)};

  SolverSpec full;
  full.id = "full";
  full.kind = SolverKind::amortized_filtering_full;
  full.config.k = 2;
  full.config.eps = 0.25;
  full.config.m = 50;
  full.config.mode = Mode::sampled;
  config.solvers.push_back(full);
  config.seeds = {1, 2};
  config.omit_wall_time = true;

  std::vector<ReportRow> rows = run_experiment(config);
  std::string json = report_to_json(rows);
  std::vector<ReportRow> parsed = report_from_json(json);
  REQUIRE(parsed.size() == rows.size());
  CHECK(report_to_json(parsed) == json);
  // Resolved parameters survive the round trip.
  CHECK(parsed[0].resolved.k == rows[0].resolved.k);
  CHECK(parsed[0].resolved.mode == rows[0].resolved.mode);
  CHECK(parsed[0].resolved.round_cap == rows[0].resolved.round_cap);

  CHECK_THROWS_AS(report_from_json("{}"), ParseError);
  CHECK_THROWS_AS(report_from_json("nope"), ParseError);
}

TEST_CASE("repeated runs of one config are byte-identical") {
  ExperimentConfig config = load_experiment_config("data/bench_example.json");
  config.instances.resize(1);  // the canonical fixture keeps this fast
  std::string first = report_to_csv(run_experiment(config));
  std::string second = report_to_csv(run_experiment(config));
  CHECK(first == second);
  CHECK(first.find("canonical") != std::string::npos);
}

TEST_CASE("write_report lands where the config points") {
  ExperimentConfig config;
  config.instances = {canonical_spec()};
  config.solvers = {greedy_spec(2)};
  config.seeds = {1};
  config.omit_wall_time = true;
  std::vector<ReportRow> rows = run_experiment(config);

  std::string path = (std::filesystem::temp_directory_path() /
                      "submax_test_report.csv")
                         .string();
  config.output = path;
  write_report(rows, config);
  CHECK(slurp(path) == report_to_csv(rows));
  std::remove(path.c_str());

  std::string other = (std::filesystem::temp_directory_path() /
                       "submax_test_report_override.csv")
                          .string();
  write_report(rows, config, other);
  CHECK(slurp(other) == report_to_csv(rows));
  std::remove(other.c_str());

  config.output.clear();
  CHECK_THROWS_AS(write_report(rows, config), InvalidArgumentError);
  CHECK_THROWS_AS(write_report(rows, config, "/nonexistent/dir/report.csv"),
                  InvalidArgumentError);
}

TEST_CASE("solver kinds map to names and back") {
  const SolverKind kinds[] = {
      SolverKind::greedy,
      SolverKind::lazy_greedy,
      SolverKind::random_baseline,
      SolverKind::iterative_filtering,
      SolverKind::amortized_filtering,
      SolverKind::amortized_filtering_proxy,
      SolverKind::amortized_filtering_full,
  };
  for (SolverKind kind : kinds) {
    CHECK(solver_kind_from_name(solver_kind_name(kind)) == kind);
  }
  CHECK(solver_kind_name(SolverKind::greedy) == "greedy");
  CHECK_THROWS_AS(solver_kind_from_name("simulated_annealing"),
                  InvalidArgumentError);
}
