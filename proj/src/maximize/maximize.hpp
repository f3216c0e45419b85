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

#ifndef COMBSEL_MAXIMIZE_MAXIMIZE_HPP_
#define COMBSEL_MAXIMIZE_MAXIMIZE_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "core/index_set.hpp"
#include "submodular/objective.hpp"

namespace combsel {

struct SelectionResult {
  IndexSet selected;          // in selection order
  std::vector<double> gains;  // marginal gain of each step
  double objective_value = 0.0;
  std::size_t budget = 0;
  std::uint64_t evaluations = 0;  // marginal-gain oracle calls
};

struct GreedyOptions {
  // Candidates that are also in the conditioning set are admitted with a
  // constant gain of 0 instead of raising an error. Selecting one adds
  // nothing to f.
  bool allow_conditioned_candidates = false;
};

// Cardinality-constrained greedy. With a conditioning set Q the maximized
// function is H_f(. | Q): Q is committed first, so step gains are
// f(A u Q u {v}) - f(A u Q). Ties go to the lowest index. Runs exactly
// min(k, |candidates|) rounds, accepting negative gains.
SelectionResult GreedyMax(const SubmodularObjective& objective,
                          const IndexSet& candidates, std::size_t k,
                          const IndexSet& conditioning = {},
                          GreedyOptions options = {});

// Same output as GreedyMax on every input, using stale upper bounds kept in a
// priority queue. Requires a submodular objective.
SelectionResult LazyGreedyMax(const SubmodularObjective& objective,
                              const IndexSet& candidates, std::size_t k,
                              const IndexSet& conditioning = {},
                              GreedyOptions options = {});

// Exact optimum over all subsets of size <= k by enumeration. Ties resolve to
// the lexicographically smallest sorted subset. Throws when the number of
// subsets exceeds 10^7.
SelectionResult BruteForceOpt(const SubmodularObjective& objective,
                              const IndexSet& candidates, std::size_t k,
                              const IndexSet& conditioning = {});

inline constexpr std::uint64_t kBruteForceLimit = 10'000'000;

}  // namespace combsel

#endif  // COMBSEL_MAXIMIZE_MAXIMIZE_HPP_
