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
// Splittable seeded randomness. Every estimator call gets its own stream
// derived from (master seed, call index), so runs are reproducible no matter
// how calls interleave. Bounded draws are hand-rolled (mask + rejection)
// because std::uniform_int_distribution is implementation-defined.

#ifndef SUBMAX_RNG_HPP_
#define SUBMAX_RNG_HPP_

#include <bit>
#include <cstdint>
#include <random>

namespace submax {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform draw from [0, bound). bound must be > 0.
  std::uint64_t uniform_index(std::uint64_t bound) {
    std::uint64_t mask = ~0ull >> std::countl_zero(bound | 1ull);
    for (;;) {
      std::uint64_t v = engine_() & mask;
      if (v < bound) return v;
    }
  }

  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

 private:
  std::mt19937_64 engine_;
};

// Derives independent child streams from a master seed. Stream i is a pure
// function of (master, i); next() hands out streams in call order.
class SeedSequence {
 public:
  explicit SeedSequence(std::uint64_t master) : master_(master) {}

  RngStream stream(std::uint64_t index) const {
    std::uint64_t s = master_ ^ (index * 0xd1342543de82ef95ull + 0x2545f4914f6cdd1dull);
    std::uint64_t seed = splitmix64(s);
    seed ^= splitmix64(s);
    return RngStream(seed);
  }

  RngStream next() { return stream(counter_++); }

  SeedSequence child(std::uint64_t index) const {
    std::uint64_t s = master_ + 0x9e3779b97f4a7c15ull * (index + 1);
    return SeedSequence(splitmix64(s));
  }

  std::uint64_t master() const { return master_; }

 private:
  std::uint64_t master_;
  std::uint64_t counter_ = 0;
};

}  // namespace submax

#endif  // SUBMAX_RNG_HPP_
