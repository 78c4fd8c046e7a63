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
// Acceptance suite: nine end-to-end checks of the library's guarantees at
// desk scale, each reported as a single pass/fail line.

#ifndef SUBMAX_ACCEPT_HPP_
#define SUBMAX_ACCEPT_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace submax {

struct CriterionResult {
  int index = 0;
  std::string name;
  bool passed = false;
  std::string detail;   // measured numbers backing the verdict
  double seconds = 0.0;
};

// Runs all nine criteria in order, printing one line per criterion to `out`
// as each finishes. `bench_example_path` is the shipped experiment config the
// determinism criterion replays. `only` restricts the run to one criterion
// index (1-9); 0 runs everything.
std::vector<CriterionResult> run_acceptance(
    const std::string& bench_example_path, std::ostream& out, int only = 0);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace submax

#endif  // SUBMAX_ACCEPT_HPP_
