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
// Adaptive-round accounting. One round = one batch of value queries whose
// inputs may depend on all previous rounds but not on each other. The ledger
// records the issued batch length per round; answering duplicate queries from
// a per-batch cache is an evaluation detail that does not change the count.

#ifndef SUBMAX_LEDGER_HPP_
#define SUBMAX_LEDGER_HPP_

#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "submax/errors.hpp"

namespace submax {

class RoundLedger {
 public:
  RoundLedger() = default;
  explicit RoundLedger(std::optional<std::size_t> round_cap)
      : round_cap_(round_cap) {}

  std::size_t rounds() const { return queries_per_round_.size(); }
  std::size_t total_queries() const { return total_queries_; }
  const std::vector<std::size_t>& queries_per_round() const {
    return queries_per_round_;
  }
  std::optional<std::size_t> round_cap() const { return round_cap_; }
  void set_round_cap(std::optional<std::size_t> cap) { round_cap_ = cap; }

  // Throws if starting one more round would exceed the cap. The algorithm
  // layer catches RoundCapExceeded and returns its best-so-far, truncated.
  void check_can_start_round() const {
    if (round_cap_ && rounds() >= *round_cap_) {
      throw RoundCapExceeded("round cap " + std::to_string(*round_cap_) +
                             " reached after " + std::to_string(rounds()) +
                             " rounds");
    }
  }

  // Records one completed round of n_queries queries. Empty batches are the
  // caller's responsibility to skip; a round of zero queries is not recorded.
  void record_round(std::size_t n_queries) {
    if (n_queries == 0) return;
    check_can_start_round();
    queries_per_round_.push_back(n_queries);
    total_queries_ += n_queries;
  }

  // Folds extra queries into the most recent round. Used for the single
  // bookkeeping query a caller derives from a round it just issued.
  void amend_last_round(std::size_t extra_queries) {
    if (queries_per_round_.empty() || extra_queries == 0) return;
    queries_per_round_.back() += extra_queries;
    total_queries_ += extra_queries;
  }

  // Lockstep merge: sub-ledger round j lands in this ledger's round
  // offset + j, summing query counts. Used by the guess grid, where all
  // guesses advance one global round at a time.
  void merge_lockstep(const RoundLedger& sub, std::size_t offset) {
    if (offset + sub.rounds() > queries_per_round_.size()) {
      queries_per_round_.resize(offset + sub.rounds(), 0);
    }
    for (std::size_t j = 0; j < sub.rounds(); ++j) {
      queries_per_round_[offset + j] += sub.queries_per_round_[j];
      total_queries_ += sub.queries_per_round_[j];
    }
  }

  bool consistent() const {
    return std::accumulate(queries_per_round_.begin(), queries_per_round_.end(),
                           std::size_t{0}) == total_queries_;
  }

 private:
  std::vector<std::size_t> queries_per_round_;
  std::size_t total_queries_ = 0;
  std::optional<std::size_t> round_cap_;
};

}  // namespace submax

#endif  // SUBMAX_LEDGER_HPP_
