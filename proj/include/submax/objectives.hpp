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
// The instance zoo (weighted coverage, facility location, concave-of-modular),
// instance file IO, deterministic synthesizers, and a structural validator
// for monotonicity + diminishing returns.

#ifndef SUBMAX_OBJECTIVES_HPP_
#define SUBMAX_OBJECTIVES_HPP_

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "submax/oracle.hpp"
#include "submax/sets.hpp"

namespace submax {

// f(S) = total weight of universe items covered by S.
class CoverageInstance : public ValueOracle {
 public:
  // cover[i] lists the universe items (ids in [0, universe)) element i covers.
  // weights may be empty (all items weigh 1) or have one entry per item.
  CoverageInstance(ElementId n, std::int32_t universe,
                   std::vector<std::vector<std::int32_t>> cover,
                   std::vector<double> weights = {});

  const GroundSet& ground() const override { return ground_; }
  double value(const ElementSet& s) const override;
  void value_with_base(const ElementSet& base,
                       std::span<const ElementSet> deltas,
                       std::span<double> out) const override;

  std::int32_t universe() const { return universe_; }
  const std::vector<std::vector<std::int32_t>>& cover() const { return cover_; }
  const std::vector<double>& weights() const { return weights_; }

 private:
  GroundSet ground_;
  std::int32_t universe_;
  std::vector<std::vector<std::int32_t>> cover_;
  std::vector<double> weights_;
  // Scratch for value_with_base: last-touched stamp per universe item.
  mutable std::vector<std::uint32_t> stamp_;
  mutable std::uint32_t stamp_epoch_ = 0;
};

// f(S) = Σ_clients max_{i∈S} affinity(client, i); f(∅) = 0.
class FacilityLocationInstance : public ValueOracle {
 public:
  // affinity is dense row-major, clients × n, all entries ≥ 0.
  FacilityLocationInstance(ElementId n, std::int32_t clients,
                           std::vector<double> affinity);

  const GroundSet& ground() const override { return ground_; }
  double value(const ElementSet& s) const override;
  void value_with_base(const ElementSet& base,
                       std::span<const ElementSet> deltas,
                       std::span<double> out) const override;

  std::int32_t clients() const { return clients_; }
  const std::vector<double>& affinity() const { return affinity_; }
  double affinity_at(std::int32_t client, ElementId i) const {
    return affinity_[static_cast<std::size_t>(client) *
                         static_cast<std::size_t>(ground_.n) +
                     static_cast<std::size_t>(i)];
  }

 private:
  GroundSet ground_;
  std::int32_t clients_;
  std::vector<double> affinity_;
};

// f(S) = (Σ_{i∈S} w_i)^p with 0 < p ≤ 1, w ≥ 0.
class ConcaveModularInstance : public ValueOracle {
 public:
  ConcaveModularInstance(ElementId n, std::vector<double> weights, double p);

  const GroundSet& ground() const override { return ground_; }
  double value(const ElementSet& s) const override;
  void value_with_base(const ElementSet& base,
                       std::span<const ElementSet> deltas,
                       std::span<double> out) const override;

  const std::vector<double>& weights() const { return weights_; }
  double p() const { return p_; }

 private:
  GroundSet ground_;
  std::vector<double> weights_;
  double p_;
};

// ---------------------------------------------------------------------------
// Instance files. One JSON document per file; see README for the grammar.
// Loaders reject unknown fields and validate shapes/ranges with diagnostics.

std::unique_ptr<ValueOracle> load_instance(const std::string& path);
std::unique_ptr<ValueOracle> parse_instance(const std::string& text,
                                            const std::string& origin);
// Serializes deterministically: fixed field order, round-trip float encoding.
std::string serialize_instance(const ValueOracle& oracle);
void save_instance(const ValueOracle& oracle, const std::string& path);

// ---------------------------------------------------------------------------
// Synthesizers. Same (kind, params, seed) → byte-identical instance.

struct CoverageSynthParams {
  std::int32_t universe = 0;
  double density = 0.1;       // P(element covers item), in (0, 1]
  double weight_scale = 0.0;  // 0 → unit weights; else weights in (0, scale]
};
std::unique_ptr<CoverageInstance> synthesize_coverage(
    ElementId n, const CoverageSynthParams& params, std::uint64_t seed);

struct FacilitySynthParams {
  std::int32_t clients = 0;
};
std::unique_ptr<FacilityLocationInstance> synthesize_facility(
    ElementId n, const FacilitySynthParams& params, std::uint64_t seed);

struct ConcaveModularSynthParams {
  double p = 0.5;
  double weight_scale = 1.0;
};
std::unique_ptr<ConcaveModularInstance> synthesize_concave_modular(
    ElementId n, const ConcaveModularSynthParams& params, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Structural validation.

enum class ValidateMode { exhaustive, sampled };

struct Violation {
  std::string kind;  // "monotonicity" or "diminishing_returns"
  ElementSet s;
  ElementSet t;
  ElementId element = -1;  // the added element for diminishing-returns checks
  double lhs = 0.0;
  double rhs = 0.0;

  std::string describe() const;
};

struct ValidationReport {
  std::vector<Violation> violations;
  std::size_t checks = 0;
  bool ok() const { return violations.empty(); }
};

// Exhaustive mode checks every S ⊆ T and every single-element extension
// (requires n ≤ 12); sampled mode draws `trials` random chains S ⊆ T, a ∉ T.
// Tolerance is absolute (1e-9): a violation must exceed it to be reported.
ValidationReport validate_submodular(const ValueOracle& oracle,
                                     ValidateMode mode,
                                     std::size_t trials = 0,
                                     std::uint64_t seed = 0);

}  // namespace submax

#endif  // SUBMAX_OBJECTIVES_HPP_
