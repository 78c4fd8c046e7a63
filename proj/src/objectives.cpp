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

#include "submax/objectives.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "submax/rng.hpp"

namespace submax {

namespace {

constexpr double kValidateTol = 1e-9;

void require(bool ok, const std::string& msg) {
  if (!ok) throw InvalidArgumentError(msg);
}

}  // namespace

// ---------------------------------------------------------------------------
// Coverage

CoverageInstance::CoverageInstance(
    ElementId n, std::int32_t universe,
    std::vector<std::vector<std::int32_t>> cover, std::vector<double> weights)
    : ground_{n}, universe_(universe), cover_(std::move(cover)),
      weights_(std::move(weights)) {
  require(n >= 1, "coverage: n must be >= 1");
  require(universe_ >= 0, "coverage: universe size must be >= 0");
  require(cover_.size() == static_cast<std::size_t>(n),
          "coverage: cover must list one adjacency per element");
  if (weights_.empty()) {
    weights_.assign(static_cast<std::size_t>(universe_), 1.0);
  }
  require(weights_.size() == static_cast<std::size_t>(universe_),
          "coverage: weights must have one entry per universe item");
  for (double w : weights_) {
    require(w >= 0.0 && std::isfinite(w),
            "coverage: item weights must be finite and >= 0");
  }
  for (auto& adj : cover_) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    for (std::int32_t item : adj) {
      require(item >= 0 && item < universe_,
              "coverage: cover references item " + std::to_string(item) +
                  " outside universe of size " + std::to_string(universe_));
    }
  }
  stamp_.assign(static_cast<std::size_t>(universe_), 0);
}

double CoverageInstance::value(const ElementSet& s) const {
  std::span<const ElementSet> deltas(&s, 1);
  double out = 0.0;
  std::span<double> outs(&out, 1);
  value_with_base(ElementSet{}, deltas, outs);
  return out;
}

void CoverageInstance::value_with_base(const ElementSet& base,
                                       std::span<const ElementSet> deltas,
                                       std::span<double> out) const {
  // Stamp scheme: items covered by the base get the epoch stamp; each delta
  // then marks with epoch + i + 1 so no per-query reset is needed.
  if (stamp_epoch_ >
      std::numeric_limits<std::uint32_t>::max() - deltas.size() - 2) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    stamp_epoch_ = 0;
  }
  const std::uint32_t base_mark = ++stamp_epoch_;
  double base_value = 0.0;
  for (ElementId e : base) {
    for (std::int32_t item : cover_[static_cast<std::size_t>(e)]) {
      auto idx = static_cast<std::size_t>(item);
      if (stamp_[idx] < base_mark) {
        stamp_[idx] = base_mark;
        base_value += weights_[idx];
      }
    }
  }
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    const std::uint32_t mark = ++stamp_epoch_;
    double gain = 0.0;
    for (ElementId e : deltas[i]) {
      for (std::int32_t item : cover_[static_cast<std::size_t>(e)]) {
        auto idx = static_cast<std::size_t>(item);
        if (stamp_[idx] < base_mark) {
          stamp_[idx] = mark;
          gain += weights_[idx];
        } else if (stamp_[idx] > base_mark && stamp_[idx] < mark) {
          // Marked by an earlier delta; re-mark for this one.
          stamp_[idx] = mark;
          gain += weights_[idx];
        }
      }
    }
    out[i] = base_value + gain;
  }
}

// ---------------------------------------------------------------------------
// Facility location

FacilityLocationInstance::FacilityLocationInstance(ElementId n,
                                                   std::int32_t clients,
                                                   std::vector<double> affinity)
    : ground_{n}, clients_(clients), affinity_(std::move(affinity)) {
  require(n >= 1, "facility: n must be >= 1");
  require(clients_ >= 1, "facility: clients must be >= 1");
  require(affinity_.size() == static_cast<std::size_t>(clients_) *
                                  static_cast<std::size_t>(n),
          "facility: affinity must be dense row-major clients x n");
  for (double a : affinity_) {
    require(a >= 0.0 && std::isfinite(a),
            "facility: affinities must be finite and >= 0");
  }
}

double FacilityLocationInstance::value(const ElementSet& s) const {
  if (s.empty()) return 0.0;
  double total = 0.0;
  for (std::int32_t c = 0; c < clients_; ++c) {
    double best = 0.0;
    for (ElementId e : s) best = std::max(best, affinity_at(c, e));
    total += best;
  }
  return total;
}

void FacilityLocationInstance::value_with_base(
    const ElementSet& base, std::span<const ElementSet> deltas,
    std::span<double> out) const {
  std::vector<double> base_best(static_cast<std::size_t>(clients_), 0.0);
  for (std::int32_t c = 0; c < clients_; ++c) {
    for (ElementId e : base) {
      base_best[static_cast<std::size_t>(c)] =
          std::max(base_best[static_cast<std::size_t>(c)], affinity_at(c, e));
    }
  }
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    double total = 0.0;
    for (std::int32_t c = 0; c < clients_; ++c) {
      double best = base_best[static_cast<std::size_t>(c)];
      for (ElementId e : deltas[i]) best = std::max(best, affinity_at(c, e));
      total += best;
    }
    out[i] = total;
  }
}

// ---------------------------------------------------------------------------
// Concave of modular

ConcaveModularInstance::ConcaveModularInstance(ElementId n,
                                               std::vector<double> weights,
                                               double p)
    : ground_{n}, weights_(std::move(weights)), p_(p) {
  require(n >= 1, "concave_modular: n must be >= 1");
  require(weights_.size() == static_cast<std::size_t>(n),
          "concave_modular: weights must have one entry per element");
  for (double w : weights_) {
    require(w >= 0.0 && std::isfinite(w),
            "concave_modular: weights must be finite and >= 0");
  }
  require(p_ > 0.0 && p_ <= 1.0, "concave_modular: p must lie in (0, 1]");
}

double ConcaveModularInstance::value(const ElementSet& s) const {
  double sum = 0.0;
  for (ElementId e : s) sum += weights_[static_cast<std::size_t>(e)];
  return p_ == 1.0 ? sum : std::pow(sum, p_);
}

void ConcaveModularInstance::value_with_base(const ElementSet& base,
                                             std::span<const ElementSet> deltas,
                                             std::span<double> out) const {
  double base_sum = 0.0;
  for (ElementId e : base) base_sum += weights_[static_cast<std::size_t>(e)];
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    double sum = base_sum;
    for (ElementId e : deltas[i]) {
      if (!base.contains(e)) sum += weights_[static_cast<std::size_t>(e)];
    }
    out[i] = p_ == 1.0 ? sum : std::pow(sum, p_);
  }
}

// ---------------------------------------------------------------------------
// Synthesizers

std::unique_ptr<CoverageInstance> synthesize_coverage(
    ElementId n, const CoverageSynthParams& params, std::uint64_t seed) {
  require(n >= 1, "synthesize_coverage: n must be >= 1");
  require(params.universe >= 1, "synthesize_coverage: universe must be >= 1");
  require(params.density > 0.0 && params.density <= 1.0,
          "synthesize_coverage: density must lie in (0, 1]");
  require(params.weight_scale >= 0.0,
          "synthesize_coverage: weight_scale must be >= 0");
  SeedSequence seq(seed);
  RngStream cover_rng = seq.stream(0);
  std::vector<std::vector<std::int32_t>> cover(static_cast<std::size_t>(n));
  for (ElementId e = 0; e < n; ++e) {
    auto& adj = cover[static_cast<std::size_t>(e)];
    for (std::int32_t item = 0; item < params.universe; ++item) {
      if (cover_rng.uniform01() < params.density) adj.push_back(item);
    }
    if (adj.empty()) {
      adj.push_back(static_cast<std::int32_t>(
          cover_rng.uniform_index(static_cast<std::uint64_t>(params.universe))));
    }
  }
  std::vector<double> weights;
  if (params.weight_scale > 0.0) {
    RngStream weight_rng = seq.stream(1);
    weights.resize(static_cast<std::size_t>(params.universe));
    for (auto& w : weights) {
      w = params.weight_scale * (1.0 - weight_rng.uniform01());
    }
  }
  return std::make_unique<CoverageInstance>(n, params.universe,
                                            std::move(cover),
                                            std::move(weights));
}

std::unique_ptr<FacilityLocationInstance> synthesize_facility(
    ElementId n, const FacilitySynthParams& params, std::uint64_t seed) {
  require(n >= 1, "synthesize_facility: n must be >= 1");
  require(params.clients >= 1, "synthesize_facility: clients must be >= 1");
  SeedSequence seq(seed);
  RngStream rng = seq.stream(0);
  std::vector<double> affinity(static_cast<std::size_t>(n) *
                               static_cast<std::size_t>(params.clients));
  for (auto& a : affinity) a = rng.uniform01();
  return std::make_unique<FacilityLocationInstance>(n, params.clients,
                                                    std::move(affinity));
}

std::unique_ptr<ConcaveModularInstance> synthesize_concave_modular(
    ElementId n, const ConcaveModularSynthParams& params, std::uint64_t seed) {
  require(n >= 1, "synthesize_concave_modular: n must be >= 1");
  require(params.p > 0.0 && params.p <= 1.0,
          "synthesize_concave_modular: p must lie in (0, 1]");
  require(params.weight_scale > 0.0,
          "synthesize_concave_modular: weight_scale must be > 0");
  SeedSequence seq(seed);
  RngStream rng = seq.stream(0);
  std::vector<double> weights(static_cast<std::size_t>(n));
  for (auto& w : weights) w = params.weight_scale * rng.uniform01();
  return std::make_unique<ConcaveModularInstance>(n, std::move(weights),
                                                  params.p);
}

// ---------------------------------------------------------------------------
// Structural validation

namespace {

void check_pair(const std::vector<double>& table, ElementId n, std::uint64_t s,
                std::uint64_t t, ValidationReport& report) {
  // s ⊆ t assumed. Monotonicity, then diminishing returns for each a ∉ t.
  auto set_of = [n](std::uint64_t bits) {
    std::vector<ElementId> ids;
    for (ElementId i = 0; i < n; ++i) {
      if (bits & (1ull << i)) ids.push_back(i);
    }
    return ElementSet(std::move(ids));
  };
  report.checks += 1;
  if (table[s] > table[t] + kValidateTol) {
    report.violations.push_back(
        {"monotonicity", set_of(s), set_of(t), -1, table[s], table[t]});
  }
  for (ElementId a = 0; a < n; ++a) {
    std::uint64_t bit = 1ull << a;
    if (t & bit) continue;
    report.checks += 1;
    double gain_s = table[s | bit] - table[s];
    double gain_t = table[t | bit] - table[t];
    if (gain_s + kValidateTol < gain_t) {
      report.violations.push_back(
          {"diminishing_returns", set_of(s), set_of(t), a, gain_s, gain_t});
    }
  }
}

}  // namespace

std::string Violation::describe() const {
  auto render = [](const ElementSet& set) {
    std::string out = "{";
    bool first = true;
    for (ElementId id : set) {
      if (!first) out += ",";
      out += std::to_string(id);
      first = false;
    }
    return out + "}";
  };
  std::string out = kind + " violated: ";
  if (kind == "monotonicity") {
    out += "f(" + render(s) + ") = " + std::to_string(lhs) + " > f(" +
           render(t) + ") = " + std::to_string(rhs);
  } else {
    out += "gain of " + std::to_string(element) + " at " + render(s) + " = " +
           std::to_string(lhs) + " < gain at " + render(t) + " = " +
           std::to_string(rhs);
  }
  return out;
}

ValidationReport validate_submodular(const ValueOracle& oracle,
                                     ValidateMode mode, std::size_t trials,
                                     std::uint64_t seed) {
  const ElementId n = oracle.ground().n;
  ValidationReport report;

  if (mode == ValidateMode::exhaustive) {
    require(n <= 12, "validate_submodular: exhaustive mode requires n <= 12");
    const std::uint64_t full = 1ull << n;
    std::vector<double> table(full);
    for (std::uint64_t bits = 0; bits < full; ++bits) {
      std::vector<ElementId> ids;
      for (ElementId i = 0; i < n; ++i) {
        if (bits & (1ull << i)) ids.push_back(i);
      }
      table[bits] = oracle.value(ElementSet(std::move(ids)));
    }
    if (table[0] < -kValidateTol) {
      report.violations.push_back(
          {"monotonicity", ElementSet{}, ElementSet{}, -1, table[0], 0.0});
    }
    // Enumerate all nested pairs s ⊆ t by iterating subsets of each t.
    for (std::uint64_t t = 0; t < full; ++t) {
      std::uint64_t s = t;
      for (;;) {
        check_pair(table, n, s, t, report);
        if (s == 0) break;
        s = (s - 1) & t;
      }
    }
    return report;
  }

  // Sampled: random chains s ⊆ t plus a random extension element.
  SeedSequence seq(seed);
  RngStream rng = seq.stream(0);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    std::vector<ElementId> s_ids, t_ids;
    for (ElementId i = 0; i < n; ++i) {
      double u = rng.uniform01();
      if (u < 1.0 / 3.0) {
        s_ids.push_back(i);
        t_ids.push_back(i);
      } else if (u < 2.0 / 3.0) {
        t_ids.push_back(i);
      }
    }
    ElementSet s(std::move(s_ids));
    ElementSet t(std::move(t_ids));
    ElementId a = static_cast<ElementId>(
        rng.uniform_index(static_cast<std::uint64_t>(n)));
    double fs = oracle.value(s);
    double ft = oracle.value(t);
    report.checks += 1;
    if (fs > ft + kValidateTol) {
      report.violations.push_back({"monotonicity", s, t, -1, fs, ft});
    }
    if (!t.contains(a)) {
      report.checks += 1;
      double gain_s = oracle.value(s.with(a)) - fs;
      double gain_t = oracle.value(t.with(a)) - ft;
      if (gain_s + kValidateTol < gain_t) {
        report.violations.push_back(
            {"diminishing_returns", s, t, a, gain_s, gain_t});
      }
    }
  }
  return report;
}

}  // namespace submax
