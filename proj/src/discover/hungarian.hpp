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

#ifndef COMBSEL_DISCOVER_HUNGARIAN_HPP_
#define COMBSEL_DISCOVER_HUNGARIAN_HPP_

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace combsel {

struct Assignment {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (row, col), by row
  double cost = 0.0;
};

// Minimum-cost one-to-one assignment of min(rows, cols) pairs for a row-major
// rows x cols cost matrix (Kuhn-Munkres with potentials, O(n^2 m)).
Assignment HungarianAssign(std::span<const double> cost, std::size_t rows,
                           std::size_t cols);

}  // namespace combsel

#endif  // COMBSEL_DISCOVER_HUNGARIAN_HPP_
