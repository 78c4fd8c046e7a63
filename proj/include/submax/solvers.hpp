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
// Low-adaptivity maximization under a cardinality constraint, plus the
// baselines used to judge it. All solvers meter their value queries through
// a RoundLedger; the reported solution value is re-checked once at the end
// as an unmetered audit query.

#ifndef SUBMAX_SOLVERS_HPP_
#define SUBMAX_SOLVERS_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "submax/ledger.hpp"
#include "submax/oracle.hpp"
#include "submax/rng.hpp"
#include "submax/sampling.hpp"
#include "submax/sets.hpp"

namespace submax {

enum class Mode { exact, sampled };

// How a filter call turns the surviving pool into the block it returns.
//  best:    the enumerated subset / drawn sample maximizing f(S ∪ R).
//  uniform: a uniform index into the enumerated subsets (exact mode only;
//           sampled mode always returns the best sample).
enum class BlockRule { best, uniform };

struct SolverConfig {
  std::size_t k = 1;
  double eps = 0.2;                       // must lie in (0, 1/2)
  std::optional<std::size_t> r;           // outer-iteration bound override
  std::optional<std::size_t> m;           // sample count; required if sampled
  double delta = 0.05;
  Mode mode = Mode::exact;
  BlockRule block_rule = BlockRule::best;
  std::optional<std::size_t> round_cap;   // default: sampled-mode formula
  std::optional<std::size_t> epoch_budget;  // default ⌈20/eps⌉
  std::uint64_t seed = 0;
  bool proxy_literal_guard = false;  // epoch guard on the pool estimate
  std::size_t enumeration_cap = 200000;

  void validate() const;
};

// Config with every default folded in for a concrete ground-set size.
struct ResolvedParams {
  std::size_t k = 1;
  double eps = 0.2;
  std::size_t r = 1;            // threshold denominator
  std::size_t t = 1;            // block size max(1, ⌊k/r⌋)
  std::size_t max_blocks = 1;   // max(r, ⌈k/t⌉) block additions
  std::size_t epoch_budget = 1;
  std::size_t m = 0;            // 0 in exact mode
  Mode mode = Mode::exact;
  BlockRule block_rule = BlockRule::best;
  std::optional<std::size_t> round_cap;
  double delta = 0.05;
  std::uint64_t seed = 0;
  bool proxy_literal_guard = false;
  std::size_t enumeration_cap = 200000;
  std::size_t shrink_log_bound = 0;  // ⌈log_{1+eps/2} n⌉ (exact-mode lemma)
};

// Resolves defaults against a ground set of size n:
//   r: ⌈20 ε⁻¹ log_{1+ε/2} n⌉ exact, ⌈20 ε⁻¹ log_{1+ε/3} n⌉ sampled (min 1)
//   round_cap (sampled only): ⌈20/ε⌉(2⌈log_{1+ε/3} n⌉+1) + max(r, ⌈k/t⌉)
ResolvedParams resolve_config(const SolverConfig& config, ElementId n);

enum class StopReason {
  completed,           // ran its full schedule
  cardinality_reached, // |S| hit k early
  round_cap,           // ledger cap fired; best-so-far returned
  guess_failed,        // filter pool emptied; v* was too ambitious
};

// Per-epoch (or per-outer-iteration) trace record.
struct EpochRecord {
  std::size_t epoch = 0;
  double start_value = 0.0;
  std::size_t filter_iterations = 0;           // discard passes this epoch
  std::vector<std::size_t> pool_trajectory;    // |X| after each discard pass
  std::vector<double> value_trajectory;        // f(S∪T) after each block add
  // Discard passes that started from a degenerate pool (|X| ≤ t), where the
  // geometric-shrink lemma's sampling premise does not apply.
  std::size_t degenerate_passes = 0;
};

struct RunResult {
  ElementSet solution;
  double value = 0.0;
  RoundLedger ledger;
  bool truncated = false;
  StopReason stop_reason = StopReason::completed;
  std::vector<EpochRecord> trace;
  bool degraded_to_sampled = false;  // exact run fell back on sampling
  std::string warning;
  ResolvedParams resolved;
};

// Output of one filter call (exposed for tests and the trace).
struct FilterOutcome {
  ElementSet survivors;     // pool after discards; block NOT removed
  ElementSet block;         // candidate block drawn from survivors
  double block_union_value = 0.0;  // f(S ∪ block); NaN when short-circuited
  double base_value = 0.0;         // f(S) as measured (or carried in)
  // Mean random-block gain measured by the exiting set-value round; NaN when
  // short-circuited. The literal epoch-guard variant keys off this.
  double exit_estimate = 0.0;
  std::size_t iterations = 0;      // discard passes executed
  std::vector<std::size_t> pool_trajectory;  // |X| after each pass
  std::size_t degenerate_passes = 0;
  // Per-element marginal estimates from the final discard pass, if any.
  std::map<ElementId, double> last_marginals;
  bool short_circuited = false;  // v* ≤ f(S): returned without any round
  bool degraded_to_sampled = false;
};

// One filtering pass: repeatedly estimate the mean random-block gain of the
// pool and discard elements whose membership-conditioned marginal falls below
// (1+ε/2)(1−ε)(v*−f(S))/k, until the mean gain reaches (1−ε)(v*−f(S))/r.
// Costs 2 ledger rounds per discard pass plus 1 for the exiting check.
// known_base_value short-circuits the call when v* ≤ f(S) is already known.
FilterOutcome filter(const ValueOracle& oracle, const ElementSet& x,
                     const ElementSet& s, double v_star,
                     const ResolvedParams& params, RoundLedger& ledger,
                     SeedSequence& seeds,
                     std::optional<double> known_base_value = std::nullopt);

// Block-by-block maximization: each outer iteration filters N ∖ S and adds
// one block, until |S| = k (at most max(r, ⌈k/t⌉) iterations).
RunResult iterative_filtering(const ValueOracle& oracle,
                              const SolverConfig& config, double v_star);

// Epoch-structured variant: within an epoch the pool persists across filter
// calls and blocks accumulate until the epoch's measured gain reaches
// (ε/20)(v* − f(S_epoch)); ⌈20/ε⌉ epochs. Exact mode; empty-pool propagates.
RunResult amortized_filtering(const ValueOracle& oracle,
                              const SolverConfig& config, double v_star);

// Same schedule with sampled one-round estimators and best-sample blocks;
// an emptied pool means the guess failed and yields a flagged best-so-far
// instead of an error.
RunResult amortized_filtering_proxy(const ValueOracle& oracle,
                                    const SolverConfig& config, double v_star);

// Geometric grid of value guesses seeded by the best singleton.
struct OptGuessGrid {
  double base = 0.0;    // f(a*)
  double factor = 1.0;  // 1 + eps
  std::vector<double> values;  // base · factor^i, i = 0..⌈log_{1+eps} n⌉
};
OptGuessGrid build_opt_grid(double best_singleton, double eps, ElementId n);

// Full pipeline: one round queries all singletons, then one proxy run per
// grid guess with rounds merged in lockstep (global rounds = 1 + max over
// guesses); returns the best guess's solution.
RunResult amortized_filtering_full(const ValueOracle& oracle,
                                   const SolverConfig& config);

// Baselines ----------------------------------------------------------------

// Classic greedy: k steps, one marginal batch per step (ledger.rounds = k).
RunResult greedy(const ValueOracle& oracle, std::size_t k);

// Identical solutions and round count to greedy, fewer total queries: each
// step re-evaluates stale upper bounds in pop order and charges the step's
// queries as one round.
RunResult lazy_greedy(const ValueOracle& oracle, std::size_t k);

// Uniform size-k subset; one round to price it.
RunResult random_baseline(const ValueOracle& oracle, std::size_t k,
                          std::uint64_t seed);

// Exhaustive optimum over exactly-k subsets (monotonicity makes smaller sets
// dominated). Requires C(n, k) ≤ cap. Ties break to the lexicographically
// smallest set. Unmetered: this is the verification oracle.
std::pair<ElementSet, double> brute_force_opt(const ValueOracle& oracle,
                                              std::size_t k,
                                              std::size_t cap = 2000000);

}  // namespace submax

#endif  // SUBMAX_SOLVERS_HPP_
