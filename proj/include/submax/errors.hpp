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

#ifndef SUBMAX_ERRORS_HPP_
#define SUBMAX_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace submax {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad user-supplied arguments or configuration (operational error).
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

// Instance / config file could not be parsed; message carries diagnostics.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A batch would start a round beyond the configured round cap.
class RoundCapExceeded : public Error {
 public:
  using Error::Error;
};

// Every candidate was discarded mid-filter: the value guess is too high.
// Carries the partial trace of the throwing call so callers and lemma tests
// can still audit the discard passes that led here.
class EmptyFilterPool : public Error {
 public:
  using Error::Error;
  std::vector<std::size_t> pool_trajectory;
  std::size_t iterations = 0;
  std::size_t degenerate_passes = 0;
};

// Exact expectation requested but C(|X|, t) exceeds the enumeration cap.
class EnumerationCapExceeded : public Error {
 public:
  using Error::Error;
};

// A checked runtime invariant failed (distinct exit code in the CLI).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace submax

#endif  // SUBMAX_ERRORS_HPP_
