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

#include "submax/accept.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>

#include "submax/bench.hpp"
#include "submax/errors.hpp"
#include "submax/objectives.hpp"
#include "submax/sampling.hpp"
#include "submax/solvers.hpp"

namespace submax {

namespace {

std::size_t ceil_log(ElementId n, double base) {
  if (n <= 1) return 0;
  double raw = std::log(static_cast<double>(n)) / std::log(base);
  return static_cast<std::size_t>(std::ceil(raw - 1e-9));
}

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), pattern, v);
  return buf;
}

CoverageInstance canonical_instance() {
  return CoverageInstance(4, 6, {{0, 1, 2}, {2, 3}, {4}, {3, 4, 5}});
}

// Monotone but supermodular: the gain of one more element grows with |S|.
// The structural validator must flag it, and flag it for the right reason.
class SupermodularDouble : public ValueOracle {
 public:
  const GroundSet& ground() const override { return ground_; }
  double value(const ElementSet& s) const override {
    double size = static_cast<double>(s.size());
    return size * size;
  }
  void value_with_base(const ElementSet& base,
                       std::span<const ElementSet> deltas,
                       std::span<double> out) const override {
    for (std::size_t i = 0; i < deltas.size(); ++i) {
      out[i] = value(base.united(deltas[i]));
    }
  }

 private:
  GroundSet ground_{5};
};

struct Fixture {
  std::string name;
  std::unique_ptr<ValueOracle> oracle;
  std::size_t k = 0;
};

// Small instances of all three objective kinds, cheap enough for 2^n
// structural checks and brute-force optima.
std::vector<Fixture> exhaustive_fixtures() {
  std::vector<Fixture> out;
  out.push_back(
      {"canonical", std::make_unique<CoverageInstance>(canonical_instance()), 2});
  out.push_back({"cover-6",
                 synthesize_coverage(6, {8, 0.4, 0.0}, 1), 2});
  out.push_back({"cover-8",
                 synthesize_coverage(8, {10, 0.3, 0.0}, 2), 3});
  out.push_back({"cover-10",
                 synthesize_coverage(10, {12, 0.25, 2.0}, 3), 3});
  out.push_back({"facility-6", synthesize_facility(6, {8}, 4), 2});
  out.push_back({"facility-8", synthesize_facility(8, {10}, 5), 3});
  out.push_back({"facility-10", synthesize_facility(10, {12}, 6), 3});
  out.push_back({"concave-6",
                 synthesize_concave_modular(6, {0.5, 1.0}, 7), 2});
  out.push_back({"concave-8",
                 synthesize_concave_modular(8, {0.7, 2.0}, 8), 3});
  out.push_back({"concave-10",
                 synthesize_concave_modular(10, {0.5, 1.0}, 9), 4});
  return out;
}

std::unique_ptr<ValueOracle> make_instance(int kind, ElementId n,
                                           std::uint64_t seed) {
  switch (kind % 3) {
    case 0:
      return synthesize_coverage(n, {n + 2, 0.3, 0.0}, seed);
    case 1:
      return synthesize_facility(n, {n + 2}, seed);
    default:
      return synthesize_concave_modular(n, {0.5, 1.0}, seed);
  }
}

CriterionResult start(int index, const char* name) {
  CriterionResult res;
  res.index = index;
  res.name = name;
  return res;
}

// 1. Structural validator: every small fixture is accepted, the planted
// supermodular double is rejected for diminishing returns.
CriterionResult criterion_validator() {
  CriterionResult res = start(1, "structure-validator");
  std::vector<Fixture> fixtures = exhaustive_fixtures();
  std::size_t clean = 0;
  for (const Fixture& fx : fixtures) {
    ValidationReport report =
        validate_submodular(*fx.oracle, ValidateMode::exhaustive);
    if (report.ok()) {
      ++clean;
    } else {
      res.detail += fx.name + " flagged: " +
                    report.violations.front().describe() + "; ";
    }
  }
  SupermodularDouble planted;
  ValidationReport report =
      validate_submodular(planted, ValidateMode::exhaustive);
  bool flagged = !report.ok();
  bool right_reason = flagged;
  for (const Violation& v : report.violations) {
    if (v.kind != "diminishing_returns") right_reason = false;
  }
  res.passed = clean == fixtures.size() && flagged && right_reason;
  res.detail += std::to_string(clean) + "/" + std::to_string(fixtures.size()) +
                " fixtures clean, planted double " +
                (flagged ? (right_reason ? "flagged (" +
                                               std::to_string(
                                                   report.violations.size()) +
                                               " diminishing-returns hits)"
                                         : "flagged for the wrong reason")
                         : "missed");
  return res;
}

// 2. Estimator concentration: the sampled set-value estimate lands within
// 0.5 of the exact expectation in at least 95% of 1000 seeded trials.
CriterionResult criterion_concentration() {
  CriterionResult res = start(2, "estimator-concentration");
  CoverageInstance inst = canonical_instance();
  const ElementSet all = inst.ground().all();
  const ElementSet empty;
  const std::size_t t = 2;
  const double exact = 4.0;  // E[f(R)] over all C(4,2) pairs
  const std::size_t m = plan_sample_size(6.0, 0.5, 0.05);

  const std::size_t trials = 1000;
  std::size_t hits = 0;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    SeedSequence seq(trial);
    RngStream rng = seq.stream(0);
    RoundLedger ledger;
    SetValueResult sv = estimate_set_value(inst, all, empty, t, m, rng, ledger);
    if (std::abs(sv.estimate.value - exact) <= 0.5) ++hits;
  }
  res.passed = hits * 100 >= trials * 95;
  res.detail = std::to_string(hits) + "/" + std::to_string(trials) +
               " trials within 0.5 of " + fmt("%.1f", exact) +
               " at m=" + std::to_string(m) + " (need 950)";
  return res;
}

// 3. Shrink rate: on exact-mode runs, every filter pass that neither exits
// nor empties the pool cuts it below |X|/(1+eps/2).
CriterionResult criterion_shrink() {
  CriterionResult res = start(3, "filter-shrink-rate");
  const double eps = 0.2;
  const double rate = 1.0 + eps / 2.0;
  std::size_t audited = 0;
  std::size_t degenerate = 0;
  std::size_t violations = 0;
  std::size_t emptied = 0;

  for (int i = 0; i < 20; ++i) {
    ElementId n = static_cast<ElementId>(12 + (i % 7) * 2);  // 12..24
    auto inst = synthesize_coverage(n, {n + 4, 0.3, 0.0}, 100 + i);
    double opt = brute_force_opt(*inst, 3).second;

    SolverConfig cfg;
    cfg.k = 3;
    cfg.r = 1;  // t = 3, and t(1+eps/2) >= k/r keeps every pass separating
    cfg.eps = eps;
    cfg.mode = Mode::exact;
    ResolvedParams p = resolve_config(cfg, n);

    RoundLedger ledger;
    SeedSequence seeds(static_cast<std::uint64_t>(i));
    std::vector<std::size_t> trajectory;
    try {
      FilterOutcome fo = filter(*inst, inst->ground().all(), ElementSet{}, opt,
                                p, ledger, seeds, std::nullopt);
      trajectory = fo.pool_trajectory;
    } catch (const EmptyFilterPool& e) {
      trajectory = e.pool_trajectory;
      ++emptied;
    }

    std::size_t prev = n;
    for (std::size_t entry : trajectory) {
      if (prev <= p.t) {
        ++degenerate;  // nothing provable once the pool is block-sized
      } else {
        ++audited;
        if (!(static_cast<double>(entry) < static_cast<double>(prev) / rate)) {
          ++violations;
        }
      }
      prev = entry;
    }
  }
  res.passed = violations == 0 && audited > 0;
  res.detail = std::to_string(audited) + " shrinking passes audited, " +
               std::to_string(violations) + " violations (" +
               std::to_string(degenerate) + " block-sized passes skipped, " +
               std::to_string(emptied) + " pools emptied)";
  return res;
}

// 4. Exact-mode approximation: amortized filtering with the true optimum as
// its guess clears (1 - 1/e - eps) * OPT on every instance.
CriterionResult criterion_exact_approximation() {
  CriterionResult res = start(4, "exact-approximation");
  const double eps = 0.2;
  const double factor = 1.0 - std::exp(-1.0) - eps;
  std::size_t met = 0;
  double worst_ratio = 1.0;
  for (int i = 0; i < 30; ++i) {
    ElementId n = static_cast<ElementId>(10 + 2 * ((i / 3) % 3));  // 10..14
    std::size_t k = 2 + (i % 4);                                   // 2..5
    auto inst = make_instance(i, n, 200 + i);
    double opt = brute_force_opt(*inst, k).second;

    SolverConfig cfg;
    cfg.k = k;
    cfg.eps = eps;
    cfg.mode = Mode::exact;
    RunResult run = amortized_filtering(*inst, cfg, opt);
    double ratio = opt > 0.0 ? run.value / opt : 1.0;
    worst_ratio = std::min(worst_ratio, ratio);
    if (run.value >= factor * opt - 1e-9) ++met;
  }
  res.passed = met == 30;
  res.detail = std::to_string(met) + "/30 runs at value >= " +
               fmt("%.4f", factor) + "*OPT, worst ratio " +
               fmt("%.4f", worst_ratio);
  return res;
}

// 5. Full sampled pipeline: no side information at all; at least 90% of
// 200 seeded runs clear (1 - 1/e - eps) * OPT.
CriterionResult criterion_sampled_pipeline() {
  CriterionResult res = start(5, "sampled-pipeline-approximation");
  const double eps = 0.25;
  const double factor = 1.0 - std::exp(-1.0) - eps;
  std::size_t met = 0;
  std::size_t total = 0;
  double worst_ratio = 1.0;
  for (int i = 0; i < 10; ++i) {
    ElementId n = static_cast<ElementId>(8 + 2 * (i % 3));  // 8..12
    std::size_t k = 2 + (i % 3);                             // 2..4
    auto inst = make_instance(i, n, 300 + i);
    double opt = brute_force_opt(*inst, k).second;

    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      SolverConfig cfg;
      cfg.k = k;
      cfg.eps = eps;
      cfg.delta = 0.05;
      cfg.m = 500;
      cfg.mode = Mode::sampled;
      cfg.seed = seed;
      RunResult run = amortized_filtering_full(*inst, cfg);
      double ratio = opt > 0.0 ? run.value / opt : 1.0;
      worst_ratio = std::min(worst_ratio, ratio);
      ++total;
      if (run.value >= factor * opt - 1e-9) ++met;
    }
  }
  res.passed = met * 10 >= total * 9;
  res.detail = std::to_string(met) + "/" + std::to_string(total) +
               " runs at value >= " + fmt("%.4f", factor) +
               "*OPT (need 180), worst ratio " + fmt("%.4f", worst_ratio);
  return res;
}

// 6. Adaptivity accounting: greedy is exactly k-adaptive; amortized rounds
// stay under the logarithmic budget and grow sublinearly while greedy's
// grow linearly in k = n/4.
CriterionResult criterion_adaptivity() {
  CriterionResult res = start(6, "adaptivity-accounting");
  const double eps = 0.2;
  const std::size_t per_eps = 100;  // ceil(20 / eps)

  RunResult canon = greedy(canonical_instance(), 2);
  bool greedy_ok = canon.ledger.rounds() == 2;

  struct Scale {
    ElementId n;
    std::size_t k;
    std::size_t r;
    bool sampled;
  };
  const Scale scales[] = {
      {64, 16, 16, false}, {256, 64, 64, false}, {1024, 256, 20, true}};
  std::vector<std::size_t> amortized_rounds;
  std::vector<std::size_t> greedy_rounds;
  std::string runs;
  bool bounds_ok = true;
  for (const Scale& sc : scales) {
    auto inst = synthesize_coverage(
        sc.n, {sc.n, 4.0 / static_cast<double>(sc.n), 0.0},
        600 + static_cast<std::uint64_t>(sc.n));
    RunResult g = greedy(*inst, sc.k);
    greedy_ok = greedy_ok && g.ledger.rounds() == sc.k;
    greedy_rounds.push_back(g.ledger.rounds());

    std::size_t bound = per_eps * (2 * ceil_log(sc.n, 1.0 + eps / 2.0) + 1) +
                        sc.r;
    SolverConfig cfg;
    cfg.k = sc.k;
    cfg.eps = eps;
    cfg.r = sc.r;
    if (sc.sampled) {
      cfg.mode = Mode::sampled;
      cfg.m = 200;
      cfg.round_cap = bound;
    } else {
      cfg.mode = Mode::exact;
    }
    RunResult run = amortized_filtering(*inst, cfg, g.value);
    amortized_rounds.push_back(run.ledger.rounds());
    bool within = !run.truncated && run.ledger.rounds() <= bound;
    bounds_ok = bounds_ok && within;
    runs += "n=" + std::to_string(sc.n) + ": " +
            std::to_string(run.ledger.rounds()) + "<=" +
            std::to_string(bound) + (within ? "" : " EXCEEDED") + ", ";
  }

  double growth = static_cast<double>(amortized_rounds[2]) /
                  static_cast<double>(amortized_rounds[0]);
  double linear = static_cast<double>(greedy_rounds[2]) /
                  static_cast<double>(greedy_rounds[0]);
  bool sublinear = growth < linear;

  res.passed = greedy_ok && bounds_ok && sublinear;
  res.detail = std::string("greedy rounds == k ") +
               (greedy_ok ? "everywhere" : "VIOLATED") + "; " + runs +
               "16x ground growth cost " + fmt("%.2f", growth) +
               "x rounds vs greedy " + fmt("%.0f", linear) + "x";
  return res;
}

// 7. Classical baselines: greedy clears (1 - 1/e) * OPT on the small
// fixtures and lazy evaluation reproduces it exactly with fewer queries.
CriterionResult criterion_baselines() {
  CriterionResult res = start(7, "greedy-baselines");
  const double factor = 1.0 - std::exp(-1.0);
  std::vector<Fixture> fixtures = exhaustive_fixtures();
  std::size_t met = 0;
  for (const Fixture& fx : fixtures) {
    double opt = brute_force_opt(*fx.oracle, fx.k).second;
    RunResult g = greedy(*fx.oracle, fx.k);
    if (g.value >= factor * opt - 1e-9) ++met;
  }

  std::size_t identical = 0;
  std::size_t cheaper = 0;
  const int pairs = 20;
  for (int i = 0; i < pairs; ++i) {
    ElementId n = static_cast<ElementId>(10 + (i % 6) * 2);  // 10..20
    std::size_t k = 2 + (i % 5);                              // 2..6
    auto inst = make_instance(i, n, 400 + i);
    RunResult g = greedy(*inst, k);
    RunResult lg = lazy_greedy(*inst, k);
    if (g.solution.ids() == lg.solution.ids() && g.value == lg.value) {
      ++identical;
    }
    if (lg.ledger.total_queries() < g.ledger.total_queries()) ++cheaper;
  }
  res.passed =
      met == fixtures.size() && identical == pairs && cheaper == pairs;
  res.detail = std::to_string(met) + "/" + std::to_string(fixtures.size()) +
               " fixtures at greedy >= " + fmt("%.4f", factor) + "*OPT; " +
               std::to_string(identical) + "/" + std::to_string(pairs) +
               " lazy runs identical, " + std::to_string(cheaper) + "/" +
               std::to_string(pairs) + " with fewer queries";
  return res;
}

// 8. Guess grid: built from the best singleton, it always brackets OPT
// within one (1+eps) factor.
CriterionResult criterion_grid() {
  CriterionResult res = start(8, "opt-guess-grid");
  const double eps = 0.25;
  std::vector<Fixture> fixtures = exhaustive_fixtures();
  std::size_t bracketed = 0;
  for (const Fixture& fx : fixtures) {
    const ElementId n = fx.oracle->ground().n;
    double best_singleton = 0.0;
    for (ElementId a = 0; a < n; ++a) {
      best_singleton = std::max(best_singleton, fx.oracle->value(ElementSet{a}));
    }
    double opt = brute_force_opt(*fx.oracle, fx.k).second;
    OptGuessGrid grid = build_opt_grid(best_singleton, eps, n);
    bool found = false;
    for (double v : grid.values) {
      if (v >= opt * (1.0 - 1e-12) && v <= (1.0 + eps) * opt * (1.0 + 1e-12)) {
        found = true;
        break;
      }
    }
    if (found) {
      ++bracketed;
    } else {
      res.detail += fx.name + " unbracketed; ";
    }
  }
  res.passed = bracketed == fixtures.size();
  res.detail += std::to_string(bracketed) + "/" +
                std::to_string(fixtures.size()) +
                " fixtures with some grid value in [OPT, " + fmt("%.2f", 1 + eps) +
                "*OPT]";
  return res;
}

// 9. Determinism: replaying the shipped experiment config produces
// byte-identical report files.
CriterionResult criterion_determinism(const std::string& bench_example_path) {
  CriterionResult res = start(9, "report-determinism");
  ExperimentConfig config = load_experiment_config(bench_example_path);
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path();
  std::string ext = config.format == "json" ? ".json" : ".csv";
  fs::path first = dir / ("submax_accept_report_1" + ext);
  fs::path second = dir / ("submax_accept_report_2" + ext);

  std::vector<ReportRow> rows1 = run_experiment(config);
  write_report(rows1, config, first.string());
  std::vector<ReportRow> rows2 = run_experiment(config);
  write_report(rows2, config, second.string());

  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
  };
  std::string text1 = slurp(first);
  std::string text2 = slurp(second);
  fs::remove(first);
  fs::remove(second);

  res.passed = !text1.empty() && text1 == text2;
  res.detail = std::to_string(rows1.size()) + " rows, " +
               std::to_string(text1.size()) + " bytes, replay " +
               (text1 == text2 ? "identical" : "DIVERGED");
  return res;
}

void print_result(std::ostream& out, const CriterionResult& res) {
  out << (res.passed ? "[PASS] " : "[FAIL] ") << res.index << " " << res.name
      << ": " << res.detail << " (" << fmt("%.1f", res.seconds) << "s)\n"
      << std::flush;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(
    const std::string& bench_example_path, std::ostream& out, int only) {
  // Per-criterion wall budgets in seconds; 0 means untimed.
  const double budgets[] = {10.0, 30.0, 60.0, 120.0, 600.0, 300.0, 0, 0, 0};
  std::vector<CriterionResult> results;
  for (int index = 1; index <= 9; ++index) {
    if (only != 0 && index != only) continue;
    auto start = std::chrono::steady_clock::now();
    CriterionResult res;
    switch (index) {
      case 1:
        res = criterion_validator();
        break;
      case 2:
        res = criterion_concentration();
        break;
      case 3:
        res = criterion_shrink();
        break;
      case 4:
        res = criterion_exact_approximation();
        break;
      case 5:
        res = criterion_sampled_pipeline();
        break;
      case 6:
        res = criterion_adaptivity();
        break;
      case 7:
        res = criterion_baselines();
        break;
      case 8:
        res = criterion_grid();
        break;
      default:
        res = criterion_determinism(bench_example_path);
        break;
    }
    res.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    double budget = budgets[index - 1];
    if (budget > 0.0 && res.seconds >= budget) {
      res.passed = false;
      res.detail += "; over the " + fmt("%.0f", budget) + "s budget";
    }
    print_result(out, res);
    results.push_back(std::move(res));
  }
  return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
  if (results.empty()) return false;
  for (const CriterionResult& res : results) {
    if (!res.passed) return false;
  }
  return true;
}

}  // namespace submax
