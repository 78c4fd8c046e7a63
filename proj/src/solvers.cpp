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

#include "submax/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "submax/errors.hpp"

namespace submax {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

// ceil with a small shave so analytically integral inputs do not round up
// off floating point noise.
std::size_t ceil_count(double x) {
  double c = std::ceil(x - 1e-9);
  return c <= 0.0 ? 0 : static_cast<std::size_t>(c);
}

// ⌈log_base n⌉, 0 for n = 1.
std::size_t ceil_log(ElementId n, double base) {
  if (n <= 1) return 0;
  return ceil_count(std::log(static_cast<double>(n)) / std::log(base));
}

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

void note_degrade(RunResult& res) {
  if (res.degraded_to_sampled) return;
  res.degraded_to_sampled = true;
  res.warning =
      "exact enumeration exceeded the cap; sampled estimators substituted";
}

// Sample count for a degraded exact request: resolve the guard granularity
// eps·v*/20 against the guess itself, so the fallback stays threshold-sharp.
std::size_t degrade_sample_size(double v_star, const ResolvedParams& p) {
  if (!(v_star > 0.0)) return 1;
  return plan_sample_size(v_star, p.eps * v_star / 20.0, p.delta);
}

// Shrinks an oversized block to `room` members, keeping the highest filter
// marginals (ties to the lowest id). When the filter call never ran a
// marginal round, one singleton-marginal round prices the block members.
ElementSet shrink_block(const ValueOracle& oracle, const ElementSet& s,
                        const FilterOutcome& fo, std::size_t room,
                        RoundLedger& ledger) {
  std::vector<ElementId> ranked = fo.block.ids();
  std::vector<double> score(ranked.size());
  bool have_all = true;
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    auto it = fo.last_marginals.find(ranked[i]);
    if (it == fo.last_marginals.end()) {
      have_all = false;
      break;
    }
    score[i] = it->second;
  }
  if (!have_all) {
    score = marginal_batch(oracle, s, ranked, ledger);
  }
  std::vector<std::size_t> order(ranked.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  // ranked is id-ascending, so stable sort keeps lowest id among ties.
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return score[a] > score[b];
  });
  std::vector<ElementId> kept;
  kept.reserve(room);
  for (std::size_t i = 0; i < room; ++i) kept.push_back(ranked[order[i]]);
  return ElementSet(std::move(kept));
}

}  // namespace

void SolverConfig::validate() const {
  if (k < 1) throw InvalidArgumentError("SolverConfig: k must be >= 1");
  if (!(eps > 0.0) || !(eps < 0.5)) {
    throw InvalidArgumentError("SolverConfig: eps must lie in (0, 1/2)");
  }
  if (!(delta > 0.0) || !(delta < 1.0)) {
    throw InvalidArgumentError("SolverConfig: delta must lie in (0, 1)");
  }
  if (mode == Mode::sampled && (!m || *m < 1)) {
    throw InvalidArgumentError("SolverConfig: sampled mode requires m >= 1");
  }
  if (r && *r < 1) throw InvalidArgumentError("SolverConfig: r must be >= 1");
  if (epoch_budget && *epoch_budget < 1) {
    throw InvalidArgumentError("SolverConfig: epoch_budget must be >= 1");
  }
  if (round_cap && *round_cap < 1) {
    throw InvalidArgumentError("SolverConfig: round_cap must be >= 1");
  }
  if (enumeration_cap < 1) {
    throw InvalidArgumentError("SolverConfig: enumeration_cap must be >= 1");
  }
}

ResolvedParams resolve_config(const SolverConfig& config, ElementId n) {
  config.validate();
  if (n < 1) throw InvalidArgumentError("resolve_config: ground set is empty");
  if (config.k > static_cast<std::size_t>(n)) {
    throw InvalidArgumentError("resolve_config: k exceeds ground set size " +
                               std::to_string(n));
  }
  ResolvedParams p;
  p.k = config.k;
  p.eps = config.eps;
  p.delta = config.delta;
  p.mode = config.mode;
  p.block_rule = config.block_rule;
  p.seed = config.seed;
  p.proxy_literal_guard = config.proxy_literal_guard;
  p.enumeration_cap = config.enumeration_cap;

  const double shrink_base = 1.0 + config.eps / 2.0;
  const double sample_base = 1.0 + config.eps / 3.0;
  if (config.r) {
    p.r = *config.r;
  } else {
    double base = config.mode == Mode::exact ? shrink_base : sample_base;
    double log_n = n > 1 ? std::log(static_cast<double>(n)) / std::log(base) : 0.0;
    p.r = std::max<std::size_t>(1, ceil_count(20.0 / p.eps * log_n));
  }
  p.t = std::max<std::size_t>(1, p.k / p.r);
  p.max_blocks = std::max(p.r, ceil_div(p.k, p.t));
  p.epoch_budget = config.epoch_budget.value_or(
      std::max<std::size_t>(1, ceil_count(20.0 / p.eps)));
  p.m = config.mode == Mode::sampled ? *config.m : 0;
  p.shrink_log_bound = ceil_log(n, shrink_base);
  if (config.round_cap) {
    p.round_cap = config.round_cap;
  } else if (config.mode == Mode::sampled) {
    p.round_cap =
        p.epoch_budget * (2 * ceil_log(n, sample_base) + 1) + p.max_blocks;
  }
  return p;
}

FilterOutcome filter(const ValueOracle& oracle, const ElementSet& x,
                     const ElementSet& s, double v_star,
                     const ResolvedParams& params, RoundLedger& ledger,
                     SeedSequence& seeds,
                     std::optional<double> known_base_value) {
  oracle.ground().check_set(x);
  oracle.ground().check_set(s);
  FilterOutcome out;
  out.survivors = x.minus(s);
  out.block_union_value = kNan;
  out.exit_estimate = kNan;

  if (known_base_value && v_star <= *known_base_value) {
    out.base_value = *known_base_value;
    out.short_circuited = true;
    return out;
  }

  bool degraded = false;
  std::size_t fallback_m = 0;
  auto sampled_m = [&]() -> std::size_t {
    if (params.mode == Mode::sampled) return params.m;
    if (fallback_m == 0) fallback_m = degrade_sample_size(v_star, params);
    return fallback_m;
  };
  auto measure_set = [&](const ElementSet& pool) -> SetValueResult {
    if (params.mode == Mode::exact && !degraded) {
      try {
        return exact_set_expectation(oracle, pool, s, params.t, ledger,
                                     params.enumeration_cap);
      } catch (const EnumerationCapExceeded&) {
        degraded = true;
      }
    }
    RngStream rng = seeds.next();
    return estimate_set_value(oracle, pool, s, params.t, sampled_m(), rng,
                              ledger);
  };
  auto measure_marginals =
      [&](const ElementSet& pool) -> std::map<ElementId, Estimate> {
    if (params.mode == Mode::exact && !degraded) {
      try {
        return exact_marginals_all(oracle, pool, s, params.t, ledger,
                                   params.enumeration_cap);
      } catch (const EnumerationCapExceeded&) {
        degraded = true;
      }
    }
    RngStream rng = seeds.next();
    return estimate_marginals_all(oracle, pool, s, params.t, sampled_m(), rng,
                                  ledger);
  };
  auto choose_block = [&](const SetValueResult& sv) -> BlockCandidate {
    if (params.block_rule == BlockRule::uniform && !sv.enumerated.empty()) {
      RngStream rng = seeds.next();
      return sv.enumerated[static_cast<std::size_t>(
          rng.uniform_index(sv.enumerated.size()))];
    }
    return *sv.best;
  };

  bool have_base = known_base_value.has_value();
  if (have_base) out.base_value = *known_base_value;
  ElementSet pool = out.survivors;

  for (;;) {
    if (pool.empty()) {
      EmptyFilterPool err("filter: pool is empty; value guess " +
                          std::to_string(v_star) + " is unattainable");
      err.pool_trajectory = out.pool_trajectory;
      err.iterations = out.iterations;
      err.degenerate_passes = out.degenerate_passes;
      throw err;
    }
    const std::size_t start = pool.size();

    SetValueResult sv = measure_set(pool);
    if (!have_base) {
      out.base_value = sv.base_value;
      have_base = true;
    }
    const double gap = v_star - out.base_value;
    const double exit_bar =
        (1.0 - params.eps) * gap / static_cast<double>(params.r);
    if (sv.estimate.value >= exit_bar) {
      BlockCandidate pick = choose_block(sv);
      out.block = pick.block;
      out.block_union_value = pick.value_with_base;
      out.exit_estimate = sv.estimate.value;
      out.survivors = pool;
      out.degraded_to_sampled = degraded;
      return out;
    }

    std::map<ElementId, Estimate> marg = measure_marginals(pool);
    out.last_marginals.clear();
    for (const auto& [a, est] : marg) out.last_marginals[a] = est.value;
    const double discard_bar = (1.0 + params.eps / 2.0) * (1.0 - params.eps) *
                               gap / static_cast<double>(params.k);
    std::vector<ElementId> kept;
    kept.reserve(pool.size());
    for (ElementId a : pool) {
      if (out.last_marginals.at(a) >= discard_bar) kept.push_back(a);
    }

    out.iterations += 1;
    if (start <= params.t) out.degenerate_passes += 1;

    if (kept.empty()) {
      out.pool_trajectory.push_back(0);
      out.survivors = ElementSet{};
      out.degraded_to_sampled = degraded;
      EmptyFilterPool err(
          "filter: every candidate fell below the discard threshold; value "
          "guess " +
          std::to_string(v_star) + " is unattainable");
      err.pool_trajectory = out.pool_trajectory;
      err.iterations = out.iterations;
      err.degenerate_passes = out.degenerate_passes;
      throw err;
    }
    if (kept.size() == start) {
      // Stall: with t·(1+ε/2) < k/r the two thresholds cannot separate, so
      // no element is discardable. Exit with this pass's block so the caller
      // still makes progress.
      out.pool_trajectory.push_back(start);
      out.survivors = pool;
      BlockCandidate pick = choose_block(sv);
      out.block = pick.block;
      out.block_union_value = pick.value_with_base;
      out.exit_estimate = sv.estimate.value;
      out.degraded_to_sampled = degraded;
      return out;
    }
    pool = ElementSet(std::move(kept));
    out.survivors = pool;
    out.pool_trajectory.push_back(pool.size());
  }
}

RunResult iterative_filtering(const ValueOracle& oracle,
                              const SolverConfig& config, double v_star) {
  const ElementId n = oracle.ground().n;
  ResolvedParams p = resolve_config(config, n);
  if (!config.round_cap && p.mode == Mode::sampled) {
    // The resolved default caps the amortized schedule; the iterative one
    // filters from scratch every block, so scale the cap to its schedule.
    std::size_t log_n = ceil_log(n, 1.0 + p.eps / 3.0);
    p.round_cap = p.max_blocks * (2 * log_n + 1) + 1;
  }
  RunResult res;
  res.resolved = p;
  res.ledger.set_round_cap(p.round_cap);
  SeedSequence seeds(p.seed);
  ElementSet s;
  std::optional<double> known;
  StopReason stop = StopReason::completed;

  try {
    for (std::size_t it = 0; it < p.max_blocks && s.size() < p.k; ++it) {
      FilterOutcome fo = filter(oracle, oracle.ground().all(), s, v_star, p,
                                res.ledger, seeds, known);
      if (fo.degraded_to_sampled) note_degrade(res);
      EpochRecord rec;
      rec.epoch = it;
      rec.start_value = known.value_or(fo.base_value);
      rec.filter_iterations = fo.iterations;
      rec.pool_trajectory = fo.pool_trajectory;
      rec.degenerate_passes = fo.degenerate_passes;
      if (fo.short_circuited) {
        res.trace.push_back(rec);
        break;
      }
      std::size_t room = p.k - s.size();
      if (fo.block.size() <= room) {
        s = s.united(fo.block);
        known = fo.block_union_value;
        rec.value_trajectory.push_back(fo.block_union_value);
      } else {
        s = s.united(shrink_block(oracle, s, fo, room, res.ledger));
        known.reset();  // |S| = k now; the final audit prices it
      }
      res.trace.push_back(rec);
    }
    stop = s.size() >= p.k ? StopReason::cardinality_reached
                           : StopReason::completed;
  } catch (const RoundCapExceeded&) {
    res.truncated = true;
    stop = StopReason::round_cap;
  }
  res.stop_reason = stop;
  res.solution = s;
  res.value = oracle.value(s);
  return res;
}

namespace {

// Shared epoch schedule. Exact amortized propagates an emptied pool as an
// error; the proxy treats it as a failed guess and returns best-so-far.
RunResult amortized_core(const ValueOracle& oracle, const SolverConfig& config,
                         double v_star, bool soft_guess_failure) {
  const ElementId n = oracle.ground().n;
  ResolvedParams p = resolve_config(config, n);
  RunResult res;
  res.resolved = p;
  res.ledger.set_round_cap(p.round_cap);
  SeedSequence seeds(p.seed);
  ElementSet s;
  std::optional<double> known;
  StopReason stop = StopReason::completed;
  bool stop_all = false;

  for (std::size_t epoch = 0; epoch < p.epoch_budget && !stop_all; ++epoch) {
    if (s.size() >= p.k) {
      stop = StopReason::cardinality_reached;
      break;
    }
    EpochRecord rec;
    rec.epoch = epoch;
    std::optional<double> epoch_start = known;  // f(S_j) once known/measured
    ElementSet x = oracle.ground().all();       // persists within the epoch
    try {
      // First filter-and-add runs before the guard is ever consulted.
      for (;;) {
        FilterOutcome fo =
            filter(oracle, x, s, v_star, p, res.ledger, seeds, known);
        if (fo.degraded_to_sampled) note_degrade(res);
        if (fo.short_circuited) {
          stop_all = true;  // v* ≤ f(S): the target is met, nothing to gain
          break;
        }
        if (!epoch_start) epoch_start = fo.base_value;
        rec.filter_iterations += fo.iterations;
        rec.pool_trajectory.insert(rec.pool_trajectory.end(),
                                   fo.pool_trajectory.begin(),
                                   fo.pool_trajectory.end());
        rec.degenerate_passes += fo.degenerate_passes;
        x = fo.survivors;

        std::size_t room = p.k - s.size();
        if (fo.block.size() <= room) {
          s = s.united(fo.block);
          known = fo.block_union_value;
          rec.value_trajectory.push_back(fo.block_union_value);
        } else {
          s = s.united(shrink_block(oracle, s, fo, room, res.ledger));
          known.reset();
        }
        if (s.size() >= p.k) break;

        const double f_sj = *epoch_start;
        const double target = (p.eps / 20.0) * (v_star - f_sj);
        const double progress =
            p.proxy_literal_guard ? fo.exit_estimate : *known - f_sj;
        if (!(progress < target)) break;  // epoch made enough progress
      }
    } catch (const EmptyFilterPool& e) {
      rec.filter_iterations += e.iterations;
      rec.pool_trajectory.insert(rec.pool_trajectory.end(),
                                 e.pool_trajectory.begin(),
                                 e.pool_trajectory.end());
      rec.degenerate_passes += e.degenerate_passes;
      rec.start_value = epoch_start.value_or(0.0);
      res.trace.push_back(rec);
      if (!soft_guess_failure) throw;
      stop = StopReason::guess_failed;
      stop_all = true;
      continue;
    } catch (const RoundCapExceeded&) {
      rec.start_value = epoch_start.value_or(0.0);
      res.trace.push_back(rec);
      res.truncated = true;
      stop = StopReason::round_cap;
      stop_all = true;
      continue;
    }
    rec.start_value = epoch_start.value_or(0.0);
    res.trace.push_back(rec);
  }
  if (!stop_all && s.size() >= p.k) stop = StopReason::cardinality_reached;

  res.stop_reason = stop;
  res.solution = s;
  res.value = oracle.value(s);
  return res;
}

}  // namespace

RunResult amortized_filtering(const ValueOracle& oracle,
                              const SolverConfig& config, double v_star) {
  return amortized_core(oracle, config, v_star, false);
}

RunResult amortized_filtering_proxy(const ValueOracle& oracle,
                                    const SolverConfig& config,
                                    double v_star) {
  return amortized_core(oracle, config, v_star, true);
}

OptGuessGrid build_opt_grid(double best_singleton, double eps, ElementId n) {
  if (n < 1) throw InvalidArgumentError("build_opt_grid: ground set is empty");
  if (!(eps > 0.0) || !std::isfinite(eps)) {
    throw InvalidArgumentError("build_opt_grid: eps must be finite and > 0");
  }
  if (best_singleton < 0.0 || !std::isfinite(best_singleton)) {
    throw InvalidArgumentError(
        "build_opt_grid: best singleton value must be finite and >= 0");
  }
  OptGuessGrid grid;
  grid.base = best_singleton;
  grid.factor = 1.0 + eps;
  std::size_t count = ceil_log(n, grid.factor) + 1;
  grid.values.reserve(count);
  double v = best_singleton;
  for (std::size_t i = 0; i < count; ++i) {
    grid.values.push_back(v);
    v *= grid.factor;
  }
  return grid;
}

RunResult amortized_filtering_full(const ValueOracle& oracle,
                                   const SolverConfig& config) {
  if (config.mode != Mode::sampled) {
    throw InvalidArgumentError(
        "amortized_filtering_full: sampled mode required (set m)");
  }
  const ElementId n = oracle.ground().n;
  ResolvedParams p = resolve_config(config, n);
  RunResult res;
  res.resolved = p;
  res.ledger.set_round_cap(p.round_cap);

  // Round 1: every singleton, one batch.
  BatchRequest singles_batch;
  for (ElementId a = 0; a < n; ++a) singles_batch.add(ElementSet{a});
  std::vector<double> singles =
      evaluate_batch(oracle, singles_batch, res.ledger);
  std::size_t a_star = 0;
  for (std::size_t i = 1; i < singles.size(); ++i) {
    if (singles[i] > singles[a_star]) a_star = i;
  }
  OptGuessGrid grid = build_opt_grid(singles[a_star], p.eps, n);

  // One proxy run per guess. All guesses advance in lockstep: guess rounds
  // land at global offset 1, and two global rounds (the singleton round and
  // the final comparison) bracket them.
  std::optional<std::size_t> sub_cap;
  if (p.round_cap) sub_cap = *p.round_cap > 2 ? *p.round_cap - 2 : 0;
  SeedSequence seeds(p.seed);
  std::vector<RunResult> subs;
  subs.reserve(grid.values.size());
  for (std::size_t i = 0; i < grid.values.size(); ++i) {
    SolverConfig sub_cfg = config;
    sub_cfg.seed = seeds.child(i).master();
    sub_cfg.round_cap = sub_cap;
    subs.push_back(amortized_filtering_proxy(oracle, sub_cfg, grid.values[i]));
    res.ledger.merge_lockstep(subs.back().ledger, 1);
  }

  // Final round: price every guess's solution, pick the best (ties to the
  // lowest guess index).
  BatchRequest cmp;
  for (const RunResult& sub : subs) cmp.add(sub.solution);
  std::vector<double> finals = evaluate_batch(oracle, cmp, res.ledger);
  std::size_t best = 0;
  for (std::size_t i = 1; i < finals.size(); ++i) {
    if (finals[i] > finals[best]) best = i;
  }

  res.solution = subs[best].solution;
  res.value = finals[best];
  res.truncated = subs[best].truncated;
  res.stop_reason = subs[best].stop_reason;
  res.trace = subs[best].trace;
  res.degraded_to_sampled = subs[best].degraded_to_sampled;
  res.warning = subs[best].warning;
  return res;
}

RunResult greedy(const ValueOracle& oracle, std::size_t k) {
  const ElementId n = oracle.ground().n;
  if (k > static_cast<std::size_t>(n)) {
    throw InvalidArgumentError("greedy: k exceeds ground set size");
  }
  RunResult res;
  res.resolved.k = std::max<std::size_t>(1, k);
  ElementSet s;
  EpochRecord rec;
  for (std::size_t step = 0; step < k; ++step) {
    ElementSet pool = oracle.ground().all().minus(s);
    BatchRequest batch;
    int base = batch.add_base(s);
    batch.add(base, ElementSet{});
    for (ElementId a : pool) batch.add(base, ElementSet{a});
    std::vector<double> values = evaluate_batch(oracle, batch, res.ledger);
    if (step == 0) rec.start_value = values[0];
    std::size_t best = 0;
    for (std::size_t j = 1; j < pool.size(); ++j) {
      if (values[j + 1] > values[best + 1]) best = j;
    }
    s = s.with(pool.ids()[best]);
    rec.value_trajectory.push_back(values[best + 1]);
  }
  if (k > 0) res.trace.push_back(rec);
  res.stop_reason = StopReason::cardinality_reached;
  res.solution = s;
  res.value = oracle.value(s);
  return res;
}

RunResult lazy_greedy(const ValueOracle& oracle, std::size_t k) {
  const ElementId n = oracle.ground().n;
  if (k > static_cast<std::size_t>(n)) {
    throw InvalidArgumentError("lazy_greedy: k exceeds ground set size");
  }
  RunResult res;
  res.resolved.k = std::max<std::size_t>(1, k);
  ElementSet s;
  EpochRecord rec;
  if (k > 0) {
    // Step 1 prices everything once and seeds the stale bounds.
    ElementSet all = oracle.ground().all();
    BatchRequest batch;
    int base = batch.add_base(ElementSet{});
    batch.add(base, ElementSet{});
    for (ElementId a : all) batch.add(base, ElementSet{a});
    std::vector<double> values = evaluate_batch(oracle, batch, res.ledger);
    rec.start_value = values[0];
    std::size_t best = 0;
    for (std::size_t j = 1; j < all.size(); ++j) {
      if (values[j + 1] > values[best + 1]) best = j;
    }
    double running = values[best + 1];
    s = s.with(all.ids()[best]);
    rec.value_trajectory.push_back(running);

    struct Entry {
      double bound;
      double value_with;  // f(s ∪ {id}) as measured at the stamp
      ElementId id;
      std::size_t stamp;  // |S| the bound was measured against
    };
    auto lower = [](const Entry& a, const Entry& b) {
      return a.bound < b.bound || (a.bound == b.bound && a.id > b.id);
    };
    std::priority_queue<Entry, std::vector<Entry>, decltype(lower)> queue(
        lower);
    for (std::size_t j = 0; j < all.size(); ++j) {
      if (j == best) continue;
      queue.push({values[j + 1] - values[0], values[j + 1], all.ids()[j], 0});
    }

    for (std::size_t step = 1; step < k; ++step) {
      res.ledger.check_can_start_round();
      std::size_t queries = 0;
      for (;;) {
        Entry top = queue.top();
        queue.pop();
        if (top.stamp == s.size()) {
          // Fresh bound on top: every other bound is an upper bound on a
          // marginal that can only have shrunk, so this is the greedy pick.
          s = s.with(top.id);
          running = top.value_with;
          rec.value_trajectory.push_back(running);
          break;
        }
        // Refresh through the same base-plus-delta path the eager batches
        // take, so tied candidates compare bit-identically to greedy.
        ElementSet delta{top.id};
        double value = 0.0;
        oracle.value_with_base(s, std::span<const ElementSet>(&delta, 1),
                               std::span<double>(&value, 1));
        ++queries;
        queue.push({value - running, value, top.id, s.size()});
      }
      res.ledger.record_round(queries);
    }
    res.trace.push_back(rec);
  }
  res.stop_reason = StopReason::cardinality_reached;
  res.solution = s;
  res.value = oracle.value(s);
  return res;
}

RunResult random_baseline(const ValueOracle& oracle, std::size_t k,
                          std::uint64_t seed) {
  const ElementId n = oracle.ground().n;
  if (k > static_cast<std::size_t>(n)) {
    throw InvalidArgumentError("random_baseline: k exceeds ground set size");
  }
  RunResult res;
  res.resolved.k = std::max<std::size_t>(1, k);
  res.resolved.seed = seed;
  ElementSet s;
  if (k > 0) {
    SeedSequence seq(seed);
    RngStream rng = seq.stream(0);
    s = uniform_subset(oracle.ground().all(), k, rng);
  }
  BatchRequest batch;
  batch.add(s);
  std::vector<double> values = evaluate_batch(oracle, batch, res.ledger);
  res.stop_reason = StopReason::cardinality_reached;
  res.solution = s;
  res.value = values[0];
  return res;
}

std::pair<ElementSet, double> brute_force_opt(const ValueOracle& oracle,
                                              std::size_t k, std::size_t cap) {
  const ElementId n = oracle.ground().n;
  if (k > static_cast<std::size_t>(n)) {
    throw InvalidArgumentError("brute_force_opt: k exceeds ground set size");
  }
  if (k == 0) return {ElementSet{}, oracle.value(ElementSet{})};
  if (binomial_capped(static_cast<std::size_t>(n), k, cap) > cap) {
    throw InvalidArgumentError("brute_force_opt: C(" + std::to_string(n) +
                               ", " + std::to_string(k) +
                               ") exceeds enumeration cap " +
                               std::to_string(cap));
  }
  std::vector<ElementId> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = static_cast<ElementId>(i);
  ElementSet best_set;
  double best_value = -std::numeric_limits<double>::infinity();
  for (;;) {
    ElementSet candidate{std::vector<ElementId>(idx)};
    double value = oracle.value(candidate);
    // Strict improvement keeps the lexicographically smallest maximizer,
    // because enumeration is in lexicographic order.
    if (value > best_value) {
      best_value = value;
      best_set = candidate;
    }
    std::size_t i = k;
    while (i > 0 &&
           idx[i - 1] == n - static_cast<ElementId>(k) +
                             static_cast<ElementId>(i - 1)) {
      --i;
    }
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return {best_set, best_value};
}

}  // namespace submax
