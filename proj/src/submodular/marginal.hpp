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

#ifndef COMBSEL_SUBMODULAR_MARGINAL_HPP_
#define COMBSEL_SUBMODULAR_MARGINAL_HPP_

#include <variant>
#include <vector>

#include "core/index_set.hpp"
#include "submodular/objective.hpp"

namespace combsel {

// Incremental cache for f over a growing set A, so that f(A u {v}) - f(A)
// costs O(|ground|) for FL, O(1) for GC and O(|A|^2) for LogDet.
class MarginalState {
 public:
  explicit MarginalState(SubmodularObjective objective);

  // f(A u {v}) - f(A). Read-only. Throws "element already selected" if v is
  // in A. LogDet returns -inf when the extended submatrix is not positive
  // definite.
  double Gain(Index v) const;

  // Adds v to A in place.
  void Commit(Index v);
  MarginalState Committed(Index v) const;

  double value() const noexcept { return value_; }
  const IndexSet& selected() const noexcept { return selected_; }
  bool contains(Index v) const;
  const SubmodularObjective& objective() const noexcept { return objective_; }

 private:
  struct FacilityCache {
    std::vector<double> best;  // per ground position, max similarity to A
  };
  struct GraphCutCache {
    std::vector<double> column_sum;  // sum_{i in ground} s_iv, for every v
    std::vector<double> cross;       // sum_{j in A} s_jv, for every v
  };
  struct LogDetCache {
    // Row-major lower-triangular Cholesky factor of S_A + eps I.
    std::vector<std::vector<double>> factor;
  };

  void CheckCandidate(Index v) const;
  std::vector<double> SolveFactor(Index v) const;

  SubmodularObjective objective_;
  IndexSet selected_;
  std::vector<char> member_;
  double value_ = 0.0;
  std::variant<FacilityCache, GraphCutCache, LogDetCache> cache_;
};

}  // namespace combsel

#endif  // COMBSEL_SUBMODULAR_MARGINAL_HPP_
