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

#include "core/index_set.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "core/error.hpp"

namespace combsel {

IndexSet::IndexSet(std::initializer_list<Index> items)
    : IndexSet(std::vector<Index>(items)) {}

IndexSet::IndexSet(std::vector<Index> items) : items_(std::move(items)) {
  std::unordered_set<Index> seen;
  seen.reserve(items_.size());
  for (Index v : items_) {
    if (!seen.insert(v).second) {
      throw InvalidArgument("duplicate index " + std::to_string(v) +
                            " in index set");
    }
  }
}

void IndexSet::CheckBound(std::size_t bound) const {
  for (Index v : items_) {
    if (v >= bound) {
      throw InvalidArgument("index " + std::to_string(v) +
                            " out of range for " + std::to_string(bound) +
                            " items");
    }
  }
}

bool IndexSet::contains(Index v) const {
  return std::find(items_.begin(), items_.end(), v) != items_.end();
}

IndexSet IndexSet::Sorted() const {
  IndexSet out = *this;
  std::sort(out.items_.begin(), out.items_.end());
  return out;
}

IndexSet Union(const IndexSet& a, const IndexSet& b) {
  std::vector<Index> out(a.begin(), a.end());
  std::unordered_set<Index> seen(a.begin(), a.end());
  for (Index v : b) {
    if (seen.insert(v).second) out.push_back(v);
  }
  return IndexSet(std::move(out));
}

IndexSet Difference(const IndexSet& a, const IndexSet& b) {
  std::unordered_set<Index> drop(b.begin(), b.end());
  std::vector<Index> out;
  for (Index v : a) {
    if (!drop.count(v)) out.push_back(v);
  }
  return IndexSet(std::move(out));
}

IndexSet Intersection(const IndexSet& a, const IndexSet& b) {
  std::unordered_set<Index> keep(b.begin(), b.end());
  std::vector<Index> out;
  for (Index v : a) {
    if (keep.count(v)) out.push_back(v);
  }
  return IndexSet(std::move(out));
}

bool Disjoint(const IndexSet& a, const IndexSet& b) {
  std::unordered_set<Index> left(a.begin(), a.end());
  return std::none_of(b.begin(), b.end(),
                      [&](Index v) { return left.count(v) > 0; });
}

}  // namespace combsel
