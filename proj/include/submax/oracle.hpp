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
// Value-oracle interface and batched evaluation. Queries are expressed as
// base ∪ delta so oracles can pin the base once and answer many small deltas
// cheaply; the batch dedups by resolved set content, valid for that batch
// only.

#ifndef SUBMAX_ORACLE_HPP_
#define SUBMAX_ORACLE_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "submax/ledger.hpp"
#include "submax/sets.hpp"

namespace submax {

class ValueOracle {
 public:
  virtual ~ValueOracle() = default;

  virtual const GroundSet& ground() const = 0;

  // f(s). Must be deterministic, non-negative for monotone instances.
  virtual double value(const ElementSet& s) const = 0;

  // f(base ∪ deltas[i]) for every i. The default recomputes from scratch;
  // concrete oracles override it to reuse per-base state.
  virtual void value_with_base(const ElementSet& base,
                               std::span<const ElementSet> deltas,
                               std::span<double> out) const {
    for (std::size_t i = 0; i < deltas.size(); ++i) {
      out[i] = value(base.united(deltas[i]));
    }
  }
};

// An ordered list of value queries issued together as one adaptive round.
// Each query resolves to bases[base_index] ∪ delta (or just delta when
// base_index < 0). Order of results matches order of insertion.
class BatchRequest {
 public:
  int add_base(ElementSet base) {
    bases_.push_back(std::move(base));
    return static_cast<int>(bases_.size()) - 1;
  }

  void add(ElementSet set) { queries_.push_back({-1, std::move(set)}); }

  void add(int base_index, ElementSet delta) {
    queries_.push_back({base_index, std::move(delta)});
  }

  std::size_t size() const { return queries_.size(); }
  bool empty() const { return queries_.empty(); }

  const std::vector<ElementSet>& bases() const { return bases_; }

  struct Query {
    int base_index;  // -1 means no shared base
    ElementSet delta;
  };
  const std::vector<Query>& queries() const { return queries_; }

  ElementSet resolve(std::size_t i) const {
    const Query& q = queries_[i];
    if (q.base_index < 0) return q.delta;
    return bases_[static_cast<std::size_t>(q.base_index)].united(q.delta);
  }

 private:
  std::vector<ElementSet> bases_;
  std::vector<Query> queries_;
};

// Evaluates every query in the batch as ONE ledger round. Results come back
// in batch order; duplicate resolved sets are answered from a batch-local
// cache. An empty batch returns empty and records nothing. Throws
// RoundCapExceeded before evaluating if the ledger is at its cap, and
// InvalidArgumentError if any query mentions an out-of-range element.
std::vector<double> evaluate_batch(const ValueOracle& oracle,
                                   const BatchRequest& batch,
                                   RoundLedger& ledger);

// Marginal gains f(base ∪ {a}) − f(base) for every a in additions, issuing
// the base query and every union inside one ledger round. Returns values in
// additions order. Empty additions → empty result, no round.
std::vector<double> marginal_batch(const ValueOracle& oracle,
                                   const ElementSet& base,
                                   const std::vector<ElementId>& additions,
                                   RoundLedger& ledger);

}  // namespace submax

#endif  // SUBMAX_ORACLE_HPP_
