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

#ifndef SUBMAX_SETS_HPP_
#define SUBMAX_SETS_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "submax/errors.hpp"

namespace submax {

using ElementId = std::int32_t;

// Value-semantic element set over ids 0..n-1, stored sorted and unique.
// The sorted representation doubles as the canonical form for hashing and
// lexicographic tie-breaking.
class ElementSet {
 public:
  ElementSet() = default;

  ElementSet(std::initializer_list<ElementId> ids)
      : ElementSet(std::vector<ElementId>(ids)) {}

  explicit ElementSet(std::vector<ElementId> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  }

  // All ids in [0, n).
  static ElementSet full(ElementId n) {
    ElementSet s;
    s.ids_.resize(static_cast<std::size_t>(n));
    for (ElementId i = 0; i < n; ++i) s.ids_[static_cast<std::size_t>(i)] = i;
    return s;
  }

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }

  bool contains(ElementId id) const {
    return std::binary_search(ids_.begin(), ids_.end(), id);
  }

  const std::vector<ElementId>& ids() const { return ids_; }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }

  ElementSet united(const ElementSet& other) const {
    ElementSet out;
    out.ids_.reserve(ids_.size() + other.ids_.size());
    std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(),
                   other.ids_.end(), std::back_inserter(out.ids_));
    return out;
  }

  ElementSet minus(const ElementSet& other) const {
    ElementSet out;
    out.ids_.reserve(ids_.size());
    std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(),
                        other.ids_.end(), std::back_inserter(out.ids_));
    return out;
  }

  ElementSet intersect(const ElementSet& other) const {
    ElementSet out;
    std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(),
                          other.ids_.end(), std::back_inserter(out.ids_));
    return out;
  }

  ElementSet with(ElementId id) const {
    if (contains(id)) return *this;
    ElementSet out = *this;
    out.ids_.insert(std::lower_bound(out.ids_.begin(), out.ids_.end(), id), id);
    return out;
  }

  ElementSet without(ElementId id) const {
    if (!contains(id)) return *this;
    ElementSet out = *this;
    out.ids_.erase(std::lower_bound(out.ids_.begin(), out.ids_.end(), id));
    return out;
  }

  bool is_subset_of(const ElementSet& other) const {
    return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(),
                         ids_.end());
  }

  bool operator==(const ElementSet& other) const { return ids_ == other.ids_; }
  bool operator!=(const ElementSet& other) const { return ids_ != other.ids_; }

  // Lexicographic order on the sorted id sequence; used for deterministic
  // tie-breaking between equal-value sets.
  bool operator<(const ElementSet& other) const { return ids_ < other.ids_; }

 private:
  std::vector<ElementId> ids_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (ElementId id : s.ids()) {
      h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(id));
      h *= 0x100000001b3ull;
    }
    return static_cast<std::size_t>(h);
  }
};

// The ground set is just its cardinality; elements are ids 0..n-1.
struct GroundSet {
  ElementId n = 0;

  ElementSet all() const { return ElementSet::full(n); }

  void check_element(ElementId id) const {
    if (id < 0 || id >= n) {
      throw InvalidArgumentError("element id " + std::to_string(id) +
                                 " outside ground set of size " +
                                 std::to_string(n));
    }
  }

  void check_set(const ElementSet& s) const {
    if (!s.empty() && (s.ids().front() < 0 || s.ids().back() >= n)) {
      throw InvalidArgumentError("set contains ids outside ground set of size " +
                                 std::to_string(n));
    }
  }
};

}  // namespace submax

#endif  // SUBMAX_SETS_HPP_
