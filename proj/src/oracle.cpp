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

#include "submax/oracle.hpp"

#include <unordered_map>
#include <vector>

namespace submax {

std::vector<double> evaluate_batch(const ValueOracle& oracle,
                                   const BatchRequest& batch,
                                   RoundLedger& ledger) {
  if (batch.empty()) return {};
  ledger.check_can_start_round();

  const GroundSet& ground = oracle.ground();
  for (const ElementSet& base : batch.bases()) ground.check_set(base);

  // Resolve every query, dedup by set content, and group distinct queries by
  // their shared base so the oracle can amortize per-base work.
  std::vector<ElementSet> resolved(batch.size());
  std::unordered_map<ElementSet, double, ElementSetHash> cache;
  cache.reserve(batch.size() * 2);

  // group id -> (base index or -1, deltas, resolved keys)
  struct Group {
    std::vector<ElementSet> deltas;
    std::vector<ElementSet> keys;
  };
  std::unordered_map<int, Group> groups;

  for (std::size_t i = 0; i < batch.size(); ++i) {
    const auto& q = batch.queries()[i];
    ground.check_set(q.delta);
    resolved[i] = batch.resolve(i);
    auto [it, inserted] = cache.try_emplace(resolved[i], 0.0);
    if (inserted) {
      Group& g = groups[q.base_index];
      g.deltas.push_back(q.delta);
      g.keys.push_back(resolved[i]);
    }
  }

  static const ElementSet kEmpty;
  for (auto& [base_index, group] : groups) {
    const ElementSet& base =
        base_index < 0 ? kEmpty
                       : batch.bases()[static_cast<std::size_t>(base_index)];
    std::vector<double> values(group.deltas.size());
    oracle.value_with_base(base, group.deltas, values);
    for (std::size_t j = 0; j < group.keys.size(); ++j) {
      cache[group.keys[j]] = values[j];
    }
  }

  std::vector<double> out(batch.size());
  for (std::size_t i = 0; i < batch.size(); ++i) out[i] = cache[resolved[i]];
  ledger.record_round(batch.size());
  return out;
}

std::vector<double> marginal_batch(const ValueOracle& oracle,
                                   const ElementSet& base,
                                   const std::vector<ElementId>& additions,
                                   RoundLedger& ledger) {
  if (additions.empty()) return {};
  BatchRequest batch;
  int b = batch.add_base(base);
  batch.add(b, ElementSet{});
  for (ElementId a : additions) {
    oracle.ground().check_element(a);
    batch.add(b, ElementSet{a});
  }
  std::vector<double> values = evaluate_batch(oracle, batch, ledger);
  std::vector<double> out(additions.size());
  for (std::size_t i = 0; i < additions.size(); ++i) {
    out[i] = values[i + 1] - values[0];
  }
  return out;
}

}  // namespace submax
