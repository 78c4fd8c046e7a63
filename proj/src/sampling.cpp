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

#include "submax/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "submax/errors.hpp"

namespace submax {

namespace {

// Calls fn(ids) for every size-t index combination of {0, ..., p-1} mapped
// through pool, in lexicographic order (pool is sorted, so emitted sets are
// lex-ordered too).
template <typename Fn>
void for_each_combination(const std::vector<ElementId>& pool, std::size_t t,
                          Fn&& fn) {
  const std::size_t p = pool.size();
  if (t > p) return;
  if (t == 0) {
    fn(ElementSet{});
    return;
  }
  std::vector<std::size_t> idx(t);
  for (std::size_t i = 0; i < t; ++i) idx[i] = i;
  std::vector<ElementId> ids(t);
  for (;;) {
    for (std::size_t i = 0; i < t; ++i) ids[i] = pool[idx[i]];
    fn(ElementSet(ids));
    std::size_t i = t;
    while (i > 0 && idx[i - 1] == p - t + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < t; ++j) idx[j] = idx[j - 1] + 1;
  }
}

SetValueResult empty_pool_result() {
  SetValueResult res;
  res.estimate = Estimate{0.0, 0, true};
  return res;
}

}  // namespace

ElementSet uniform_subset(const ElementSet& x, std::size_t t, RngStream& rng) {
  if (t < 1 || t > x.size()) {
    throw InvalidArgumentError("uniform_subset: t must satisfy 1 <= t <= |X|");
  }
  std::vector<ElementId> ids = x.ids();
  for (std::size_t i = 0; i < t; ++i) {
    std::size_t j =
        i + static_cast<std::size_t>(
                rng.uniform_index(static_cast<std::uint64_t>(ids.size() - i)));
    std::swap(ids[i], ids[j]);
  }
  ids.resize(t);
  return ElementSet(std::move(ids));
}

std::size_t plan_sample_size(double opt_bound, double eps_abs, double delta) {
  if (!(opt_bound > 0.0) || !std::isfinite(opt_bound)) {
    throw InvalidArgumentError("plan_sample_size: opt_bound must be > 0");
  }
  if (!(eps_abs > 0.0) || !std::isfinite(eps_abs)) {
    throw InvalidArgumentError("plan_sample_size: eps_abs must be > 0");
  }
  if (!(delta > 0.0) || !(delta < 1.0)) {
    throw InvalidArgumentError("plan_sample_size: delta must lie in (0, 1)");
  }
  double ratio = opt_bound / eps_abs;
  double raw = 0.5 * ratio * ratio * std::log(2.0 / delta);
  // Shave FP noise so an analytically integral bound does not round up.
  double m = std::ceil(raw - 1e-9);
  return m < 1.0 ? 1 : static_cast<std::size_t>(m);
}

SetValueResult estimate_set_value(const ValueOracle& oracle,
                                  const ElementSet& x, const ElementSet& s,
                                  std::size_t t, std::size_t m, RngStream& rng,
                                  RoundLedger& ledger) {
  if (t < 1) throw InvalidArgumentError("estimate_set_value: t must be >= 1");
  if (m < 1) throw InvalidArgumentError("estimate_set_value: m must be >= 1");
  ElementSet pool = x.minus(s);
  if (pool.empty()) return empty_pool_result();
  const std::size_t t_eff = std::min(t, pool.size());

  std::vector<ElementSet> blocks;
  blocks.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    blocks.push_back(uniform_subset(pool, t_eff, rng));
  }

  BatchRequest batch;
  int base = batch.add_base(s);
  batch.add(base, ElementSet{});
  for (const ElementSet& r : blocks) batch.add(base, r);
  std::vector<double> values = evaluate_batch(oracle, batch, ledger);

  SetValueResult res;
  res.base_value = values[0];
  double sum = 0.0;
  std::size_t best_idx = 0;
  for (std::size_t j = 0; j < m; ++j) {
    double v = values[j + 1];
    sum += v - values[0];
    if (v > values[best_idx + 1] ||
        (v == values[best_idx + 1] && blocks[j] < blocks[best_idx])) {
      best_idx = j;
    }
  }
  res.estimate = Estimate{sum / static_cast<double>(m), m, false};
  res.best = BlockCandidate{blocks[best_idx], values[best_idx + 1]};
  return res;
}

SetValueResult exact_set_expectation(const ValueOracle& oracle,
                                     const ElementSet& x, const ElementSet& s,
                                     std::size_t t, RoundLedger& ledger,
                                     std::size_t cap) {
  if (t < 1) {
    throw InvalidArgumentError("exact_set_expectation: t must be >= 1");
  }
  ElementSet pool = x.minus(s);
  if (pool.empty()) return empty_pool_result();
  const std::size_t t_eff = std::min(t, pool.size());
  std::size_t count = binomial_capped(pool.size(), t_eff, cap);
  if (count > cap) {
    throw EnumerationCapExceeded(
        "exact_set_expectation: C(" + std::to_string(pool.size()) + ", " +
        std::to_string(t_eff) + ") exceeds cap " + std::to_string(cap));
  }

  std::vector<ElementSet> blocks;
  blocks.reserve(count);
  for_each_combination(pool.ids(), t_eff,
                       [&](ElementSet r) { blocks.push_back(std::move(r)); });

  BatchRequest batch;
  int base = batch.add_base(s);
  batch.add(base, ElementSet{});
  for (const ElementSet& r : blocks) batch.add(base, r);
  std::vector<double> values = evaluate_batch(oracle, batch, ledger);

  SetValueResult res;
  res.base_value = values[0];
  res.enumerated.reserve(blocks.size());
  double sum = 0.0;
  std::size_t best_idx = 0;
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    double v = values[j + 1];
    sum += v - values[0];
    res.enumerated.push_back(BlockCandidate{blocks[j], v});
    if (v > values[best_idx + 1]) best_idx = j;
  }
  res.estimate =
      Estimate{sum / static_cast<double>(blocks.size()), blocks.size(), true};
  res.best = BlockCandidate{blocks[best_idx], values[best_idx + 1]};
  return res;
}

namespace {

// Shared core: appends the 2m (or 2·count) queries for one element to the
// batch and returns the per-sample query index pairs.
struct MarginalPlan {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (with, without)
};

MarginalPlan plan_sampled_marginal(const ElementSet& pool_without_a,
                                   ElementId a, std::size_t t, std::size_t m,
                                   RngStream& rng, BatchRequest& batch,
                                   int base) {
  const std::size_t q_size = std::min(t - 1, pool_without_a.size());
  MarginalPlan plan;
  plan.pairs.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    ElementSet q = q_size == 0 ? ElementSet{}
                               : uniform_subset(pool_without_a, q_size, rng);
    std::size_t with = static_cast<std::size_t>(batch.size());
    batch.add(base, q.with(a));
    batch.add(base, q);
    plan.pairs.emplace_back(with, with + 1);
  }
  return plan;
}

MarginalPlan plan_exact_marginal(const ElementSet& pool_without_a, ElementId a,
                                 std::size_t t, std::size_t cap,
                                 BatchRequest& batch, int base) {
  const std::size_t q_size = std::min(t - 1, pool_without_a.size());
  std::size_t count = binomial_capped(pool_without_a.size(), q_size, cap);
  if (count > cap) {
    throw EnumerationCapExceeded(
        "exact marginal expectation: C(" +
        std::to_string(pool_without_a.size()) + ", " + std::to_string(q_size) +
        ") exceeds cap " + std::to_string(cap));
  }
  MarginalPlan plan;
  plan.pairs.reserve(count);
  for_each_combination(pool_without_a.ids(), q_size, [&](ElementSet q) {
    std::size_t with = static_cast<std::size_t>(batch.size());
    batch.add(base, q.with(a));
    batch.add(base, q);
    plan.pairs.emplace_back(with, with + 1);
  });
  return plan;
}

Estimate reduce_marginal(const MarginalPlan& plan,
                         const std::vector<double>& values, bool exact) {
  double sum = 0.0;
  for (auto [with, without] : plan.pairs) {
    sum += values[with] - values[without];
  }
  return Estimate{sum / static_cast<double>(plan.pairs.size()),
                  plan.pairs.size(), exact};
}

}  // namespace

Estimate estimate_marginal(const ValueOracle& oracle, const ElementSet& x,
                           const ElementSet& s, ElementId a, std::size_t t,
                           std::size_t m, RngStream& rng, RoundLedger& ledger) {
  if (t < 1) throw InvalidArgumentError("estimate_marginal: t must be >= 1");
  if (m < 1) throw InvalidArgumentError("estimate_marginal: m must be >= 1");
  oracle.ground().check_element(a);
  ElementSet pool = x.minus(s).without(a);
  BatchRequest batch;
  int base = batch.add_base(s);
  MarginalPlan plan = plan_sampled_marginal(pool, a, t, m, rng, batch, base);
  std::vector<double> values = evaluate_batch(oracle, batch, ledger);
  return reduce_marginal(plan, values, false);
}

std::map<ElementId, Estimate> estimate_marginals_all(
    const ValueOracle& oracle, const ElementSet& x, const ElementSet& s,
    std::size_t t, std::size_t m, RngStream& rng, RoundLedger& ledger) {
  if (t < 1) {
    throw InvalidArgumentError("estimate_marginals_all: t must be >= 1");
  }
  if (m < 1) {
    throw InvalidArgumentError("estimate_marginals_all: m must be >= 1");
  }
  ElementSet pool = x.minus(s);
  std::map<ElementId, Estimate> out;
  if (pool.empty()) return out;
  BatchRequest batch;
  int base = batch.add_base(s);
  std::vector<std::pair<ElementId, MarginalPlan>> plans;
  plans.reserve(pool.size());
  for (ElementId a : pool) {
    plans.emplace_back(
        a, plan_sampled_marginal(pool.without(a), a, t, m, rng, batch, base));
  }
  std::vector<double> values = evaluate_batch(oracle, batch, ledger);
  for (const auto& [a, plan] : plans) {
    out.emplace(a, reduce_marginal(plan, values, false));
  }
  return out;
}

Estimate exact_marginal_expectation(const ValueOracle& oracle,
                                    const ElementSet& x, const ElementSet& s,
                                    ElementId a, std::size_t t,
                                    RoundLedger& ledger, std::size_t cap) {
  if (t < 1) {
    throw InvalidArgumentError("exact_marginal_expectation: t must be >= 1");
  }
  oracle.ground().check_element(a);
  ElementSet pool = x.minus(s).without(a);
  BatchRequest batch;
  int base = batch.add_base(s);
  MarginalPlan plan = plan_exact_marginal(pool, a, t, cap, batch, base);
  std::vector<double> values = evaluate_batch(oracle, batch, ledger);
  return reduce_marginal(plan, values, true);
}

std::map<ElementId, Estimate> exact_marginals_all(
    const ValueOracle& oracle, const ElementSet& x, const ElementSet& s,
    std::size_t t, RoundLedger& ledger, std::size_t cap) {
  if (t < 1) {
    throw InvalidArgumentError("exact_marginals_all: t must be >= 1");
  }
  ElementSet pool = x.minus(s);
  std::map<ElementId, Estimate> out;
  if (pool.empty()) return out;
  BatchRequest batch;
  int base = batch.add_base(s);
  std::vector<std::pair<ElementId, MarginalPlan>> plans;
  plans.reserve(pool.size());
  for (ElementId a : pool) {
    plans.emplace_back(
        a, plan_exact_marginal(pool.without(a), a, t, cap, batch, base));
  }
  std::vector<double> values = evaluate_batch(oracle, batch, ledger);
  for (const auto& [a, plan] : plans) {
    out.emplace(a, reduce_marginal(plan, values, true));
  }
  return out;
}

std::size_t binomial_capped(std::size_t n, std::size_t k, std::size_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  if (k == 0) return 1;
  unsigned long long r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    unsigned long long factor = static_cast<unsigned long long>(n - k + i);
    if (r > std::numeric_limits<unsigned long long>::max() / factor) {
      return cap + 1;
    }
    r = r * factor / i;
    // C(n, j) grows monotonically for j <= n/2, so saturate early.
    if (r > cap) return cap + 1;
  }
  return static_cast<std::size_t>(r);
}

}  // namespace submax
