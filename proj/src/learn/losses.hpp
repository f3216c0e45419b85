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

#ifndef COMBSEL_LEARN_LOSSES_HPP_
#define COMBSEL_LEARN_LOSSES_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "core/embedding.hpp"
#include "core/index_set.hpp"
#include "submodular/objective.hpp"

namespace combsel {

// OWOD: the cross term conditions on mined unknowns. IOD: it conditions on a
// replay buffer of previously known items instead. Both share one code path;
// the mode only records which set was passed as `conditioning`.
enum class LossMode { kOwod, kIod };

LossMode ParseLossMode(std::string_view name);
std::string_view LossModeName(LossMode mode);

struct LossConfig {
  Family family = Family::kFacilityLocation;
  double eta = 1.0;       // self / cross trade-off
  double lambda = 1.0;    // GC redundancy weight, LogDet self regularizer
  double nu = 1.0;        // query weight in the cross term
  double epsilon = 1e-4;  // LogDet cross-term diagonal regularizer
  LossMode mode = LossMode::kOwod;

  void Validate() const;
};

struct LossSets {
  std::vector<IndexSet> classes;  // K_1 .. K_C, pairwise disjoint
  IndexSet conditioning;          // U (OWOD) or the replay buffer (IOD)
  IndexSet ground;                // T, the batch
};

struct LossReport {
  double l_self = 0.0;
  double l_cross = 0.0;
  double l_total = 0.0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> grad;  // dL_total / dE, row-major rows x cols
};

// Similarities are raw (signed) cosines recomputed from the embeddings.
//
// FL:     self  = sum_c 1/|K_c| sum_{i in T\K_c} max_{j in K_c} s_ij
//         cross = sum_c 1/|T| sum_{n in T} max(max_{k in K_c} s_nk
//                                             - nu max_{u in U} s_nu, 0)
// GC:     self  = sum_c 1/|K_c| [sum_{i in K_c} sum_{j in T\U} s_ij
//                               - lambda sum_{i,j in K_c} s_ij]
//         cross = sum_c 1/|T| [f(K_c) - 2 lambda nu sum_{k in K_c, u in U} s_ku]
// LogDet: self  = sum_c 1/|K_c| log det(S_Kc + lambda I)
//         cross = sum_c 1/|T| log det(S_Kc + eps I
//                                     - nu^2 S_KcU (S_U + eps I)^-1 S_UKc)
double LossSelf(const EmbeddingSet& embeddings, const LossSets& sets,
                const LossConfig& config);
double LossCross(const EmbeddingSet& embeddings, const LossSets& sets,
                 const LossConfig& config);

// l_total = l_self - eta * l_cross, with the analytic gradient.
LossReport LossTotal(const EmbeddingSet& embeddings, const LossSets& sets,
                     const LossConfig& config);

std::vector<double> GradLoss(const EmbeddingSet& embeddings,
                             const LossSets& sets, const LossConfig& config);

struct GradCheckResult {
  double max_abs_err = 0.0;
  double max_rel_err = 0.0;  // |a - n| / max(1, |a|, |n|)
  std::size_t checked = 0;
  std::size_t tie_adjacent = 0;  // coordinates excluded near FL max ties
};

// Central differences over every coordinate, or a seeded sample of 256
// coordinates when rows * cols > 5000. `analytic` defaults to GradLoss.
GradCheckResult FiniteDifferenceCheck(const EmbeddingSet& embeddings,
                                      const LossSets& sets,
                                      const LossConfig& config, double h,
                                      std::uint64_t seed = 0);
GradCheckResult FiniteDifferenceCheck(const EmbeddingSet& embeddings,
                                      const LossSets& sets,
                                      const LossConfig& config, double h,
                                      std::uint64_t seed,
                                      std::span<const double> analytic);

}  // namespace combsel

#endif  // COMBSEL_LEARN_LOSSES_HPP_
