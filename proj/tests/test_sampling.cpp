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

#include <cmath>
#include <map>
#include <set>
#include <vector>

#include "doctest.h"
#include "submax/errors.hpp"
#include "submax/sampling.hpp"
#include "test_support.hpp"

using namespace submax;
using submax::testing::canonical_coverage;
using submax::testing::enumerated_mean_gain;

TEST_CASE("sample size planning matches the Hoeffding bound") {
  // ceil(0.5 * (opt/eps)^2 * ln(2/delta)), computed independently:
  CHECK(plan_sample_size(10.0, 1.0, 0.01) == 265);
  CHECK(plan_sample_size(6.0, 0.5, 0.05) == 266);
  // 0.5 * 1 * ln(2 / (2/e^2)) = 1 exactly; the shave keeps it at 1.
  CHECK(plan_sample_size(1.0, 1.0, 2.0 / std::exp(2.0)) == 1);
  CHECK(plan_sample_size(0.001, 10.0, 0.5) == 1);  // floor of one sample

  CHECK_THROWS_AS(plan_sample_size(0.0, 1.0, 0.5), InvalidArgumentError);
  CHECK_THROWS_AS(plan_sample_size(1.0, 0.0, 0.5), InvalidArgumentError);
  CHECK_THROWS_AS(plan_sample_size(1.0, 1.0, 0.0), InvalidArgumentError);
  CHECK_THROWS_AS(plan_sample_size(1.0, 1.0, 1.0), InvalidArgumentError);
}

TEST_CASE("uniform subsets are valid, sized, and deterministic") {
  ElementSet x{1, 3, 5, 7, 9};
  SeedSequence seq(5);
  RngStream rng = seq.stream(0);
  for (int i = 0; i < 50; ++i) {
    ElementSet r = uniform_subset(x, 3, rng);
    CHECK(r.size() == 3);
    CHECK(r.is_subset_of(x));
  }
  RngStream again = seq.stream(0);
  RngStream same = seq.stream(0);
  CHECK(uniform_subset(x, 3, again).ids() == uniform_subset(x, 3, same).ids());

  RngStream full = seq.stream(1);
  CHECK(uniform_subset(x, 5, full).ids() == x.ids());

  CHECK_THROWS_AS(uniform_subset(x, 0, rng), InvalidArgumentError);
  CHECK_THROWS_AS(uniform_subset(x, 6, rng), InvalidArgumentError);
}

TEST_CASE("uniform subsets hit every subset of a small pool") {
  ElementSet x{0, 1, 2, 3};
  SeedSequence seq(11);
  RngStream rng = seq.stream(0);
  std::set<std::vector<ElementId>> seen;
  for (int i = 0; i < 400; ++i) seen.insert(uniform_subset(x, 2, rng).ids());
  CHECK(seen.size() == 6);  // all C(4,2) pairs show up
}

TEST_CASE("capped binomial counts") {
  CHECK(binomial_capped(4, 2, 100) == 6);
  CHECK(binomial_capped(24, 3, 100000) == 2024);
  CHECK(binomial_capped(10, 0, 100) == 1);
  CHECK(binomial_capped(10, 10, 100) == 1);
  // Values beyond the cap saturate instead of overflowing.
  CHECK(binomial_capped(40, 20, 1000) > 1000);
  CHECK(binomial_capped(1000, 500, 2000000) > 2000000);
}

TEST_CASE("exact set expectation on the canonical fixture") {
  CoverageInstance inst = canonical_coverage();
  RoundLedger ledger;
  SetValueResult sv = exact_set_expectation(inst, inst.ground().all(),
                                            ElementSet{}, 2, ledger, 200000);
  CHECK(sv.estimate.value == 4.0);  // mean of 4,4,6,3,4,3 over all pairs
  CHECK(sv.estimate.m_used == 6);
  CHECK(sv.estimate.exact);
  CHECK(sv.base_value == 0.0);
  REQUIRE(sv.best.has_value());
  CHECK(sv.best->block.ids() == std::vector<ElementId>{0, 3});
  CHECK(sv.best->value_with_base == 6.0);
  CHECK(sv.enumerated.size() == 6);
  // Enumeration order is lexicographic over the pool.
  CHECK(sv.enumerated[0].block.ids() == std::vector<ElementId>{0, 1});
  CHECK(sv.enumerated[5].block.ids() == std::vector<ElementId>{2, 3});
  CHECK(ledger.rounds() == 1);
  CHECK(ledger.total_queries() == 7);  // six blocks plus the base
}

TEST_CASE("exact set expectation conditions on the base set") {
  CoverageInstance inst = canonical_coverage();
  RoundLedger ledger;
  SetValueResult sv = exact_set_expectation(inst, inst.ground().all(),
                                            ElementSet{2}, 2, ledger, 200000);
  // Pool {0,1,3}: gains over f({2}) = 1 are 4, 5, 3 -> mean 4.
  CHECK(sv.estimate.value == 4.0);
  CHECK(sv.base_value == 1.0);
  CHECK(sv.best->block.ids() == std::vector<ElementId>{0, 3});
  // Independent recursive enumeration agrees.
  CHECK(sv.estimate.value ==
        doctest::Approx(enumerated_mean_gain(inst, inst.ground().all().minus(
                                                       ElementSet{2}),
                                             ElementSet{2}, 2)));
}

TEST_CASE("exact set expectation clamps block size to the pool") {
  CoverageInstance inst = canonical_coverage();
  RoundLedger ledger;
  SetValueResult sv = exact_set_expectation(inst, ElementSet{0, 1},
                                            ElementSet{}, 3, ledger, 200000);
  CHECK(sv.estimate.m_used == 1);  // only the whole pool
  CHECK(sv.estimate.value == 4.0);
}

TEST_CASE("empty pools return the zero estimate without a round") {
  CoverageInstance inst = canonical_coverage();
  RoundLedger ledger;
  SetValueResult sv = exact_set_expectation(inst, ElementSet{0},
                                            ElementSet{0}, 2, ledger, 200000);
  CHECK(sv.estimate.value == 0.0);
  CHECK(sv.estimate.exact);
  CHECK_FALSE(sv.best.has_value());
  CHECK(ledger.rounds() == 0);
}

TEST_CASE("the enumeration cap fires before any round is recorded") {
  auto inst = synthesize_coverage(20, {20, 0.3, 0.0}, 17);
  RoundLedger ledger;
  CHECK_THROWS_AS(exact_set_expectation(*inst, inst->ground().all(),
                                        ElementSet{}, 3, ledger, 100),
                  EnumerationCapExceeded);
  CHECK(ledger.rounds() == 0);
  CHECK_THROWS_AS(exact_marginals_all(*inst, inst->ground().all(),
                                      ElementSet{}, 3, ledger, 100),
                  EnumerationCapExceeded);
  CHECK(ledger.rounds() == 0);
}

TEST_CASE("sampled set values estimate the exact expectation") {
  CoverageInstance inst = canonical_coverage();
  const ElementSet all = inst.ground().all();
  const std::size_t m = 4000;
  SeedSequence seq(23);
  RngStream rng = seq.stream(0);
  RoundLedger ledger;
  SetValueResult sv = estimate_set_value(inst, all, ElementSet{}, 2, m, rng,
                                         ledger);
  CHECK(sv.estimate.value == doctest::Approx(4.0).epsilon(0.05));
  CHECK(sv.estimate.m_used == m);
  CHECK_FALSE(sv.estimate.exact);
  CHECK(sv.base_value == 0.0);
  REQUIRE(sv.best.has_value());
  // {0,3} is the unique maximizer, so enough draws must find it.
  CHECK(sv.best->block.ids() == std::vector<ElementId>{0, 3});
  CHECK(ledger.rounds() == 1);
  CHECK(ledger.total_queries() == m + 1);
}

TEST_CASE("ties among best blocks resolve deterministically") {
  // Four disjoint unit items: every pair is worth 2, every singleton 1.
  CoverageInstance flat(4, 4, {{0}, {1}, {2}, {3}});
  RoundLedger ledger;
  SetValueResult exact = exact_set_expectation(flat, flat.ground().all(),
                                               ElementSet{}, 2, ledger, 200000);
  CHECK(exact.estimate.value == 2.0);
  // All six pairs tie; the first enumerated (lex-smallest) is kept.
  CHECK(exact.best->block.ids() == std::vector<ElementId>{0, 1});

  SeedSequence seq(3);
  RngStream rng = seq.stream(0);
  SetValueResult sampled = estimate_set_value(flat, flat.ground().all(),
                                              ElementSet{}, 1, 200, rng,
                                              ledger);
  CHECK(sampled.estimate.value == 1.0);
  // All singletons tie; the lex-smallest sampled block wins.
  CHECK(sampled.best->block.ids() == std::vector<ElementId>{0});
}

TEST_CASE("sampled estimates are deterministic per stream") {
  CoverageInstance inst = canonical_coverage();
  SeedSequence seq(99);
  RngStream r1 = seq.stream(0);
  RngStream r2 = seq.stream(0);
  RoundLedger l1, l2;
  SetValueResult a = estimate_set_value(inst, inst.ground().all(),
                                        ElementSet{}, 2, 50, r1, l1);
  SetValueResult b = estimate_set_value(inst, inst.ground().all(),
                                        ElementSet{}, 2, 50, r2, l2);
  CHECK(a.estimate.value == b.estimate.value);
  CHECK(a.best->block.ids() == b.best->block.ids());
}

TEST_CASE("sampled concentration at the planned sample size") {
  CoverageInstance inst = canonical_coverage();
  const std::size_t m = plan_sample_size(6.0, 0.5, 0.05);
  std::size_t hits = 0;
  const std::size_t trials = 100;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    SeedSequence seq(trial);
    RngStream rng = seq.stream(0);
    RoundLedger ledger;
    SetValueResult sv = estimate_set_value(inst, inst.ground().all(),
                                           ElementSet{}, 2, m, rng, ledger);
    if (std::abs(sv.estimate.value - 4.0) <= 0.5) ++hits;
  }
  CHECK(hits >= 95);  // the guarantee is 95 of 100; expect ~all
}

TEST_CASE("exact conditioned marginals on the canonical fixture") {
  CoverageInstance inst = canonical_coverage();
  const ElementSet all = inst.ground().all();
  RoundLedger ledger;
  Estimate d = exact_marginal_expectation(inst, all, ElementSet{}, 3, 2,
                                          ledger, 200000);
  // Element 3 in a random pair: partners 0, 1, 2 give gains 3, 2, 2.
  CHECK(d.value == doctest::Approx(7.0 / 3.0));
  CHECK(d.exact);
  CHECK(ledger.rounds() == 1);
  CHECK(ledger.total_queries() == 6);  // three pairs, with and without
}

TEST_CASE("fused exact marginals price every element in one round") {
  CoverageInstance inst = canonical_coverage();
  const ElementSet all = inst.ground().all();
  RoundLedger ledger;
  std::map<ElementId, Estimate> marg =
      exact_marginals_all(inst, all, ElementSet{}, 2, ledger, 200000);
  REQUIRE(marg.size() == 4);
  CHECK(marg.at(0).value == doctest::Approx(8.0 / 3.0));
  CHECK(marg.at(1).value == doctest::Approx(4.0 / 3.0));
  CHECK(marg.at(2).value == doctest::Approx(2.0 / 3.0));
  CHECK(marg.at(3).value == doctest::Approx(7.0 / 3.0));
  CHECK(ledger.rounds() == 1);
  CHECK(ledger.total_queries() == 24);  // 4 elements x 3 partners x 2 sides
}

TEST_CASE("conditioned marginals at block size one are plain marginals") {
  CoverageInstance inst = canonical_coverage();
  RoundLedger ledger;
  std::map<ElementId, Estimate> marg =
      exact_marginals_all(inst, inst.ground().all(), ElementSet{2}, 1, ledger,
                          200000);
  CHECK(marg.at(0).value == doctest::Approx(3.0));  // f({0,2}) - f({2})
  CHECK(marg.at(1).value == doctest::Approx(2.0));
  CHECK(marg.at(3).value == doctest::Approx(2.0));
  CHECK(marg.count(2) == 0);  // base elements are not in the pool
}

TEST_CASE("sampled marginals estimate the exact conditioned values") {
  CoverageInstance inst = canonical_coverage();
  const ElementSet all = inst.ground().all();
  SeedSequence seq(31);
  RngStream rng = seq.stream(0);
  RoundLedger ledger;
  std::map<ElementId, Estimate> marg =
      estimate_marginals_all(inst, all, ElementSet{}, 2, 3000, rng, ledger);
  CHECK(marg.at(3).value == doctest::Approx(7.0 / 3.0).epsilon(0.05));
  CHECK(marg.at(2).value == doctest::Approx(2.0 / 3.0).epsilon(0.15));
  CHECK(ledger.rounds() == 1);
  CHECK_FALSE(marg.at(3).exact);
}
