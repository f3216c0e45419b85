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

#include "maximize/maximize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <string>

#include "core/error.hpp"
#include "submodular/marginal.hpp"

namespace combsel {
namespace {

void CheckInputs(const SubmodularObjective& objective,
                 const IndexSet& candidates, const IndexSet& conditioning,
                 const GreedyOptions& options) {
  candidates.CheckBound(objective.kernel().size());
  conditioning.CheckBound(objective.kernel().size());
  if (!options.allow_conditioned_candidates &&
      !Disjoint(candidates, conditioning)) {
    throw InvalidArgument("candidates intersect the conditioning set");
  }
}

MarginalState Conditioned(const SubmodularObjective& objective,
                          const IndexSet& conditioning) {
  MarginalState state(objective);
  for (Index q : conditioning) state.Commit(q);
  return state;
}

// Selection-aware gain: elements already committed (only possible when
// conditioned candidates are admitted) contribute nothing.
double StepGain(const MarginalState& state, Index v) {
  if (state.contains(v)) return 0.0;
  return state.Gain(v);
}

void Accept(MarginalState& state, SelectionResult& result, Index v,
            double gain) {
  if (!(gain > -std::numeric_limits<double>::infinity())) {
    throw NumericError("singular kernel submatrix");
  }
  if (!state.contains(v)) state.Commit(v);
  std::vector<Index> items = result.selected.items();
  items.push_back(v);
  result.selected = IndexSet(std::move(items));
  result.gains.push_back(gain);
  result.objective_value += gain;
}

// True if (gain_a, a) ranks before (gain_b, b): larger gain, then lower index.
bool RanksBefore(double gain_a, Index a, double gain_b, Index b) {
  if (gain_a != gain_b) return gain_a > gain_b;
  return a < b;
}

double Slack(double gain) {
  if (!std::isfinite(gain)) return 0.0;
  return 1e-10 * (1.0 + std::abs(gain));
}

}  // namespace

SelectionResult GreedyMax(const SubmodularObjective& objective,
                          const IndexSet& candidates, std::size_t k,
                          const IndexSet& conditioning, GreedyOptions options) {
  CheckInputs(objective, candidates, conditioning, options);
  MarginalState state = Conditioned(objective, conditioning);
  std::vector<Index> pool = candidates.Sorted().items();
  std::vector<char> taken(pool.size(), 0);

  SelectionResult result;
  result.budget = k;
  const std::size_t rounds = std::min(k, pool.size());
  for (std::size_t round = 0; round < rounds; ++round) {
    std::size_t best = pool.size();
    double best_gain = 0.0;
    for (std::size_t p = 0; p < pool.size(); ++p) {
      if (taken[p]) continue;
      const double gain = StepGain(state, pool[p]);
      ++result.evaluations;
      if (best == pool.size() || gain > best_gain) {
        best = p;
        best_gain = gain;
      }
    }
    taken[best] = 1;
    Accept(state, result, pool[best], best_gain);
  }
  return result;
}

SelectionResult LazyGreedyMax(const SubmodularObjective& objective,
                              const IndexSet& candidates, std::size_t k,
                              const IndexSet& conditioning,
                              GreedyOptions options) {
  CheckInputs(objective, candidates, conditioning, options);
  MarginalState state = Conditioned(objective, conditioning);

  struct Entry {
    double bound;  // gain + slack, an upper bound on the current gain
    double gain;   // exact gain when evaluated
    Index index;
    std::size_t round;
  };
  auto lower = [](const Entry& a, const Entry& b) {
    return RanksBefore(b.bound, b.index, a.bound, a.index);
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(lower)> heap(lower);

  SelectionResult result;
  result.budget = k;
  const IndexSet pool = candidates.Sorted();
  for (Index v : pool) {
    const double gain = StepGain(state, v);
    ++result.evaluations;
    heap.push({gain + Slack(gain), gain, v, 0});
  }

  const std::size_t rounds = std::min(k, pool.size());
  for (std::size_t round = 0; round < rounds; ++round) {
    while (heap.top().round != round) {
      Entry top = heap.top();
      heap.pop();
      top.gain = StepGain(state, top.index);
      top.bound = top.gain + Slack(top.gain);
      top.round = round;
      ++result.evaluations;
      heap.push(top);
    }
    // The top is fresh. Entries whose bound reaches its exact gain could
    // still win by a rounding-level margin or by index, so refresh them and
    // pick the exact best among the group.
    Entry best = heap.top();
    heap.pop();
    std::vector<Entry> contenders;
    while (!heap.empty() && heap.top().bound >= best.gain) {
      Entry e = heap.top();
      heap.pop();
      if (e.round != round) {
        e.gain = StepGain(state, e.index);
        e.bound = e.gain + Slack(e.gain);
        e.round = round;
        ++result.evaluations;
      }
      contenders.push_back(e);
    }
    for (const Entry& e : contenders) {
      if (RanksBefore(e.gain, e.index, best.gain, best.index)) {
        heap.push(best);
        best = e;
      } else {
        heap.push(e);
      }
    }
    Accept(state, result, best.index, best.gain);
  }
  return result;
}

SelectionResult BruteForceOpt(const SubmodularObjective& objective,
                              const IndexSet& candidates, std::size_t k,
                              const IndexSet& conditioning) {
  CheckInputs(objective, candidates, conditioning, {});
  const std::vector<Index> pool = candidates.Sorted().items();
  const std::size_t n = pool.size();
  const std::size_t max_size = std::min(k, n);

  // Sum of binomials with overflow guard.
  std::uint64_t count = 0;
  double approx = 0.0;
  {
    double binom = 1.0;
    for (std::size_t j = 0; j <= max_size; ++j) {
      if (j > 0) binom = binom * static_cast<double>(n - j + 1) / j;
      approx += binom;
    }
    count = approx > 1e18 ? std::numeric_limits<std::uint64_t>::max()
                          : static_cast<std::uint64_t>(std::llround(approx));
  }
  if (count > kBruteForceLimit) {
    throw InvalidArgument("brute force instance too large: " +
                          std::to_string(count) + " subsets exceed limit " +
                          std::to_string(kBruteForceLimit));
  }

  const double base = conditioning.empty() ? 0.0 : Evaluate(objective, conditioning);
  auto value_of = [&](const std::vector<Index>& subset) {
    if (conditioning.empty()) return Evaluate(objective, IndexSet(subset));
    return Evaluate(objective, Union(IndexSet(subset), conditioning)) - base;
  };

  std::vector<Index> best_subset;
  double best_value = value_of(best_subset);
  std::uint64_t evaluations = 1;
  std::vector<std::size_t> pick;
  for (std::size_t size = 1; size <= max_size; ++size) {
    pick.resize(size);
    for (std::size_t j = 0; j < size; ++j) pick[j] = j;
    while (true) {
      std::vector<Index> subset(size);
      for (std::size_t j = 0; j < size; ++j) subset[j] = pool[pick[j]];
      const double value = value_of(subset);
      ++evaluations;
      if (value > best_value ||
          (value == best_value &&
           std::lexicographical_compare(subset.begin(), subset.end(),
                                        best_subset.begin(),
                                        best_subset.end()))) {
        best_value = value;
        best_subset = subset;
      }
      // Next combination in lexicographic order.
      std::size_t j = size;
      while (j > 0 && pick[j - 1] == n - size + j - 1) --j;
      if (j == 0) break;
      ++pick[j - 1];
      for (std::size_t t = j; t < size; ++t) pick[t] = pick[t - 1] + 1;
    }
  }

  SelectionResult result;
  result.budget = k;
  result.evaluations = evaluations;
  MarginalState state = Conditioned(objective, conditioning);
  for (Index v : best_subset) {
    const double gain = state.Gain(v);
    state.Commit(v);
    result.gains.push_back(gain);
  }
  result.selected = IndexSet(best_subset);
  result.objective_value = best_value;
  return result;
}

}  // namespace combsel
