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

#include <set>
#include <vector>

#include "doctest.h"
#include "submax/errors.hpp"
#include "submax/ledger.hpp"
#include "submax/oracle.hpp"
#include "submax/rng.hpp"
#include "submax/sets.hpp"
#include "test_support.hpp"

using namespace submax;
using submax::testing::canonical_coverage;
using submax::testing::CountingOracle;

TEST_CASE("element sets sort and deduplicate on construction") {
  ElementSet s(std::vector<ElementId>{3, 1, 3, 0, 1});
  CHECK(s.ids() == std::vector<ElementId>{0, 1, 3});
  CHECK(s.size() == 3);
  CHECK(s.contains(1));
  CHECK_FALSE(s.contains(2));
}

TEST_CASE("element set algebra") {
  ElementSet a{0, 1, 2};
  ElementSet b{2, 3};
  CHECK(a.united(b).ids() == std::vector<ElementId>{0, 1, 2, 3});
  CHECK(a.minus(b).ids() == std::vector<ElementId>{0, 1});
  CHECK(a.intersect(b).ids() == std::vector<ElementId>{2});
  CHECK(a.with(5).ids() == std::vector<ElementId>{0, 1, 2, 5});
  CHECK(a.with(1).ids() == a.ids());
  CHECK(a.without(1).ids() == std::vector<ElementId>{0, 2});
  CHECK(ElementSet{0, 1}.is_subset_of(a));
  CHECK_FALSE(b.is_subset_of(a));
  CHECK(ElementSet{}.is_subset_of(b));
}

TEST_CASE("element set ordering is lexicographic") {
  CHECK(ElementSet{0, 1} < ElementSet{0, 2});
  CHECK(ElementSet{0, 3} < ElementSet{1, 2});
  CHECK(ElementSet{} < ElementSet{0});
  CHECK_FALSE(ElementSet{1} < ElementSet{1});
  // A strict prefix compares smaller.
  CHECK(ElementSet{1} < ElementSet{1, 2});
}

TEST_CASE("ground set range checks") {
  GroundSet ground{4};
  CHECK(ground.all().ids() == std::vector<ElementId>{0, 1, 2, 3});
  CHECK_NOTHROW(ground.check_set(ElementSet{0, 3}));
  CHECK_THROWS_AS(ground.check_set(ElementSet{4}), InvalidArgumentError);
  CHECK_THROWS_AS(ground.check_element(-1), InvalidArgumentError);
}

TEST_CASE("ledger accumulates rounds and enforces the cap") {
  RoundLedger ledger;
  ledger.record_round(5);
  ledger.record_round(3);
  CHECK(ledger.rounds() == 2);
  CHECK(ledger.total_queries() == 8);
  CHECK(ledger.consistent());

  SUBCASE("zero-query rounds are not rounds") {
    ledger.record_round(0);
    CHECK(ledger.rounds() == 2);
    CHECK(ledger.total_queries() == 8);
  }

  SUBCASE("the cap fires before the round is recorded") {
    ledger.set_round_cap(2);
    CHECK_THROWS_AS(ledger.record_round(1), RoundCapExceeded);
    CHECK(ledger.rounds() == 2);
    CHECK_THROWS_AS(ledger.check_can_start_round(), RoundCapExceeded);
  }

  SUBCASE("amending the last round adds queries without a new round") {
    ledger.amend_last_round(4);
    CHECK(ledger.rounds() == 2);
    CHECK(ledger.total_queries() == 12);
    CHECK(ledger.consistent());
  }
}

TEST_CASE("lockstep merge aligns sub-run rounds at an offset") {
  RoundLedger main;
  main.record_round(2);

  RoundLedger sub1;
  sub1.record_round(10);
  sub1.record_round(20);
  main.merge_lockstep(sub1, 1);
  CHECK(main.rounds() == 3);
  CHECK(main.queries_per_round() == std::vector<std::size_t>{2, 10, 20});

  // A second sub-run at the same offset shares those rounds.
  RoundLedger sub2;
  sub2.record_round(1);
  sub2.record_round(1);
  sub2.record_round(1);
  main.merge_lockstep(sub2, 1);
  CHECK(main.rounds() == 4);
  CHECK(main.queries_per_round() == std::vector<std::size_t>{2, 11, 21, 1});
  CHECK(main.total_queries() == 35);
  CHECK(main.consistent());
}

TEST_CASE("seed sequences are deterministic and independent") {
  SeedSequence a(42);
  SeedSequence b(42);
  RngStream s1 = a.stream(0);
  RngStream s2 = b.stream(0);
  for (int i = 0; i < 16; ++i) CHECK(s1.next_u64() == s2.next_u64());

  RngStream s3 = a.stream(1);
  RngStream s4 = a.stream(0);  // stream() is pure in its index
  RngStream s5 = b.stream(0);
  CHECK(s4.next_u64() == s5.next_u64());
  CHECK(s3.next_u64() != s4.next_u64());

  CHECK(SeedSequence(42).child(0).master() == SeedSequence(42).child(0).master());
  CHECK(SeedSequence(42).child(0).master() != SeedSequence(42).child(1).master());
  CHECK(SeedSequence(42).child(0).master() != SeedSequence(43).child(0).master());
}

TEST_CASE("rng stream ranges") {
  SeedSequence seq(7);
  RngStream rng = seq.stream(0);
  for (int i = 0; i < 1000; ++i) {
    std::uint64_t v = rng.uniform_index(10);
    CHECK(v < 10);
    double u = rng.uniform01();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
  // All residues show up over 1000 draws.
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 1000; ++i) seen.insert(rng.uniform_index(10));
  CHECK(seen.size() == 10);
}

TEST_CASE("batched evaluation answers in request order") {
  CoverageInstance inst = canonical_coverage();
  RoundLedger ledger;
  BatchRequest batch;
  batch.add(ElementSet{0});
  batch.add(ElementSet{});
  batch.add(ElementSet{0, 3});
  std::vector<double> values = evaluate_batch(inst, batch, ledger);
  CHECK(values == std::vector<double>{3.0, 0.0, 6.0});
  CHECK(ledger.rounds() == 1);
  CHECK(ledger.total_queries() == 3);
}

TEST_CASE("batched evaluation groups by base and deduplicates content") {
  CoverageInstance inst = canonical_coverage();
  CountingOracle counted(inst);
  RoundLedger ledger;

  BatchRequest batch;
  int base0 = batch.add_base(ElementSet{});
  int base1 = batch.add_base(ElementSet{0});
  batch.add(base0, ElementSet{1});
  batch.add(base0, ElementSet{1});  // duplicate of the previous entry
  batch.add(base1, ElementSet{3});
  batch.add(base1, ElementSet{3});  // duplicate
  batch.add(base1, ElementSet{1});
  std::vector<double> values = evaluate_batch(counted, batch, ledger);

  CHECK(values[0] == 2.0);
  CHECK(values[1] == 2.0);
  CHECK(values[2] == 6.0);
  CHECK(values[3] == 6.0);
  CHECK(values[4] == 4.0);

  // The ledger prices what was issued; the oracle only saw distinct work.
  CHECK(ledger.total_queries() == 5);
  CHECK(counted.evaluations() == 3);
  CHECK(counted.batch_calls() == 2);  // one per distinct base
}

TEST_CASE("marginal batch returns gains over the base") {
  CoverageInstance inst = canonical_coverage();
  RoundLedger ledger;
  std::vector<double> gains =
      marginal_batch(inst, ElementSet{0}, {1, 2, 3}, ledger);
  CHECK(gains == std::vector<double>{1.0, 1.0, 3.0});
  CHECK(ledger.rounds() == 1);
}

TEST_CASE("empty batch records nothing") {
  CoverageInstance inst = canonical_coverage();
  RoundLedger ledger;
  BatchRequest batch;
  std::vector<double> values = evaluate_batch(inst, batch, ledger);
  CHECK(values.empty());
  CHECK(ledger.rounds() == 0);
}
