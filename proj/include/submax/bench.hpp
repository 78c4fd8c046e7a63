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
// Experiment harness: runs a solver grid over instances × seeds, verifies
// invariants inline, and emits deterministic CSV/JSON reports.

#ifndef SUBMAX_BENCH_HPP_
#define SUBMAX_BENCH_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "submax/objectives.hpp"
#include "submax/solvers.hpp"

namespace submax {

enum class SolverKind {
  greedy,
  lazy_greedy,
  random_baseline,
  iterative_filtering,
  amortized_filtering,
  amortized_filtering_proxy,
  amortized_filtering_full,
};

std::string solver_kind_name(SolverKind kind);
SolverKind solver_kind_from_name(const std::string& name);

// One instance source: a file path or an inline synthesis spec.
struct InstanceSpec {
  std::string id;
  std::string path;   // file-backed when non-empty
  // Synthesized when path is empty:
  std::string kind;   // coverage | facility | concave_modular
  ElementId n = 0;
  std::uint64_t seed = 0;
  CoverageSynthParams coverage;
  FacilitySynthParams facility;
  ConcaveModularSynthParams concave;
};

struct SolverSpec {
  std::string id;
  SolverKind kind = SolverKind::greedy;
  SolverConfig config;
  // v* for solvers that need a guess: "opt" resolves to the brute-force
  // optimum (requires verify.brute_force), a number is used as-is.
  std::optional<double> v_star;
  bool v_star_is_opt = false;
};

struct VerifyOptions {
  bool brute_force = false;          // adds opt + ratio columns
  std::size_t brute_force_cap = 2000000;
  bool exhaustive_submodularity = false;  // n ≤ 12 structural check per instance
};

struct ExperimentConfig {
  std::vector<InstanceSpec> instances;
  std::vector<SolverSpec> solvers;
  std::vector<std::uint64_t> seeds;
  std::string output;        // report path
  std::string format = "csv";  // csv | json
  VerifyOptions verify;
  bool keep_going = false;     // report invariant violations instead of aborting
  bool omit_wall_time = false; // zero the wall column for byte-stable reports
};

ExperimentConfig load_experiment_config(const std::string& path);

struct ReportRow {
  std::string instance_id;
  std::string solver_id;
  std::uint64_t seed = 0;
  ElementId n = 0;
  std::size_t k = 0;
  double eps = 0.0;
  std::size_t m = 0;
  double value = 0.0;
  std::optional<double> opt;
  std::optional<double> ratio;
  std::size_t rounds = 0;
  std::size_t total_queries = 0;
  bool truncated = false;
  double wall_ms = 0.0;
  ResolvedParams resolved;  // embedded in JSON reports
};

// Runs the full grid; rows come back sorted by (instance, solver, seed).
// Inline invariant violations throw InvariantViolation unless keep_going.
std::vector<ReportRow> run_experiment(const ExperimentConfig& config);

// Fixed header, floats at 10 significant digits, one row per line.
std::string report_to_csv(const std::vector<ReportRow>& rows);
std::string report_to_json(const std::vector<ReportRow>& rows);
std::vector<ReportRow> report_from_json(const std::string& text);

void write_report(const std::vector<ReportRow>& rows,
                  const ExperimentConfig& config,
                  const std::string& path_override = "");

}  // namespace submax

#endif  // SUBMAX_BENCH_HPP_
