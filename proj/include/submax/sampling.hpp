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
// One-round Monte Carlo estimators and their exact enumeration counterparts.
//
// Conventions shared by every estimator here:
//  * X is normalized to X ∖ S before any drawing or enumeration.
//  * Blocks are size-t uniform subsets; when 0 < |X| < t the draw degenerates
//    to R = X, and |X| = 0 yields a zero estimate with no round.
//  * Marginal estimators condition on membership: R = {a} ∪ U(X∖{a}, t−1),
//    and the two queries per sample are f(S∪(R∖a)∪{a}) and f(S∪(R∖a)). With
//    t = 1 this is exactly the singleton marginal f_S(a).
//  * Every estimator call issues all of its queries inside ONE ledger round.

#ifndef SUBMAX_SAMPLING_HPP_
#define SUBMAX_SAMPLING_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "submax/ledger.hpp"
#include "submax/oracle.hpp"
#include "submax/rng.hpp"
#include "submax/sets.hpp"

namespace submax {

struct Estimate {
  double value = 0.0;
  std::size_t m_used = 0;  // samples drawn, or subsets enumerated when exact
  bool exact = false;
};

// A candidate block recorded alongside a set-value estimate: the sample (or
// enumerated subset) maximizing f(S ∪ R), with that value. Lets callers add a
// block whose realized gain is at least the estimated mean without spending
// another round.
struct BlockCandidate {
  ElementSet block;
  double value_with_base = 0.0;  // f(S ∪ block)
};

struct SetValueResult {
  Estimate estimate;                    // mean of f_S(R)
  double base_value = 0.0;              // f(S), measured in the same round
  std::optional<BlockCandidate> best;   // absent when X ∖ S = ∅
  // Exact mode only: every enumerated subset with its union value, in
  // enumeration order. Lets a caller draw uniformly without a new round.
  std::vector<BlockCandidate> enumerated;
};

// Uniform size-t subset of X. Requires 1 ≤ t ≤ |X|.
ElementSet uniform_subset(const ElementSet& x, std::size_t t, RngStream& rng);

// Number of Monte Carlo samples needed so one estimate lands within eps_abs
// of its mean with probability ≥ 1 − delta, for values bounded by opt_bound:
// ⌈ (1/2) (opt_bound/eps_abs)² ln(2/delta) ⌉.
std::size_t plan_sample_size(double opt_bound, double eps_abs, double delta);

// Mean of f_S(R) over m draws R ~ U(X∖S, t). One ledger round of m+1 queries
// (the base f(S) plus each union).
SetValueResult estimate_set_value(const ValueOracle& oracle,
                                  const ElementSet& x, const ElementSet& s,
                                  std::size_t t, std::size_t m, RngStream& rng,
                                  RoundLedger& ledger);

// Exact E_{R~U(X∖S, t)}[f_S(R)] by enumerating all C(|X∖S|, t) subsets.
// Throws EnumerationCapExceeded when the subset count exceeds cap.
SetValueResult exact_set_expectation(const ValueOracle& oracle,
                                     const ElementSet& x, const ElementSet& s,
                                     std::size_t t, RoundLedger& ledger,
                                     std::size_t cap = 200000);

// Membership-conditioned marginal of a single element (one round, 2m queries).
Estimate estimate_marginal(const ValueOracle& oracle, const ElementSet& x,
                           const ElementSet& s, ElementId a, std::size_t t,
                           std::size_t m, RngStream& rng, RoundLedger& ledger);

// As estimate_marginal for every a ∈ X∖S, all samples fused into one ledger
// round of 2m|X∖S| queries. Returns estimates keyed by element.
std::map<ElementId, Estimate> estimate_marginals_all(
    const ValueOracle& oracle, const ElementSet& x, const ElementSet& s,
    std::size_t t, std::size_t m, RngStream& rng, RoundLedger& ledger);

// Exact membership-conditioned marginal expectation,
// E over R = {a} ∪ U(X∖S∖{a}, t−1) of f(S∪R) − f(S∪(R∖a)).
Estimate exact_marginal_expectation(const ValueOracle& oracle,
                                    const ElementSet& x, const ElementSet& s,
                                    ElementId a, std::size_t t,
                                    RoundLedger& ledger,
                                    std::size_t cap = 200000);

// Exact marginal expectations for every a ∈ X∖S, fused into one round.
std::map<ElementId, Estimate> exact_marginals_all(const ValueOracle& oracle,
                                                  const ElementSet& x,
                                                  const ElementSet& s,
                                                  std::size_t t,
                                                  RoundLedger& ledger,
                                                  std::size_t cap = 200000);

// C(n, k) with saturation at `cap` (returns cap + 1 once it is exceeded), so
// callers can test enumeration feasibility without overflow.
std::size_t binomial_capped(std::size_t n, std::size_t k, std::size_t cap);

}  // namespace submax

#endif  // SUBMAX_SAMPLING_HPP_
