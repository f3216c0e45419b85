// Copyright 2026 The combsel Authors.
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

#ifndef COMBSEL_CORE_INDEX_SET_HPP_
#define COMBSEL_CORE_INDEX_SET_HPP_

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace combsel {

using Index = std::size_t;

// Ordered collection of distinct item indices. Order is preserved because
// greedy traces care about insertion order; membership queries are linear,
// which is fine for the set sizes used here.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(std::initializer_list<Index> items);
  explicit IndexSet(std::vector<Index> items);

  // Throws if any index is >= bound.
  void CheckBound(std::size_t bound) const;

  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  Index operator[](std::size_t i) const { return items_[i]; }
  bool contains(Index v) const;

  auto begin() const noexcept { return items_.begin(); }
  auto end() const noexcept { return items_.end(); }
  std::span<const Index> view() const noexcept { return items_; }
  const std::vector<Index>& items() const noexcept { return items_; }

  // Copy with elements in ascending order.
  IndexSet Sorted() const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<Index> items_;
};

// Set algebra preserving the order of the left operand.
IndexSet Union(const IndexSet& a, const IndexSet& b);
IndexSet Difference(const IndexSet& a, const IndexSet& b);
IndexSet Intersection(const IndexSet& a, const IndexSet& b);
bool Disjoint(const IndexSet& a, const IndexSet& b);

}  // namespace combsel

#endif  // COMBSEL_CORE_INDEX_SET_HPP_
