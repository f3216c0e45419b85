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

#ifndef COMBSEL_SUBMODULAR_OBJECTIVE_HPP_
#define COMBSEL_SUBMODULAR_OBJECTIVE_HPP_

#include <memory>
#include <span>
#include <string_view>

#include "core/index_set.hpp"
#include "core/kernel.hpp"

namespace combsel {

enum class Family {
  kFacilityLocation,
  kGraphCut,
  kLogDeterminant,
};

Family ParseFamily(std::string_view name);
std::string_view FamilyName(Family family);

struct ObjectiveParams {
  double lambda = 0.5;   // graph-cut redundancy weight
  double nu = 1.0;       // query hardness for the closed-form conditional gains
  double epsilon = 1e-4; // log-det diagonal regularizer
};

// A submodular function bound to a kernel and a summation ground set.
//
//   FL:     f(A) = sum_{i in ground} max_{j in A} s_ij
//   GC:     f(A) = sum_{i in ground} sum_{j in A} s_ij - lambda sum_{i,j in A} s_ij
//   LogDet: f(A) = log det(S_A + epsilon I)
//
// f(empty) = 0 for every family. The ground set is unused by LogDet.
class SubmodularObjective {
 public:
  SubmodularObjective(Family family,
                      std::shared_ptr<const SimilarityKernel> kernel,
                      IndexSet ground, ObjectiveParams params = {});

  Family family() const noexcept { return family_; }
  const SimilarityKernel& kernel() const noexcept { return *kernel_; }
  const std::shared_ptr<const SimilarityKernel>& kernel_ptr() const noexcept {
    return kernel_;
  }
  const IndexSet& ground() const noexcept { return ground_; }
  const ObjectiveParams& params() const noexcept { return params_; }

 private:
  Family family_;
  std::shared_ptr<const SimilarityKernel> kernel_;
  IndexSet ground_;
  ObjectiveParams params_;
};

double Evaluate(const SubmodularObjective& objective, const IndexSet& set);

// S_f: sum of f over a collection of sets.
double TotalInformation(const SubmodularObjective& objective,
                        std::span<const IndexSet> sets);

// H_f(A | Q) = f(A u Q) - f(Q). Throws "conditioning sets overlap".
double ConditionalGainDefinitional(const SubmodularObjective& objective,
                                   const IndexSet& a, const IndexSet& q);

// Closed forms weighted by nu; equal to the definitional gain at nu = 1.
//   GC:     f(A) - 2 lambda nu sum_{a in A, q in Q} s_aq
//   FL:     sum_{n in ground} max(max_{a in A} s_na - nu max_{q in Q} s_nq, 0)
//   LogDet: log det(S_A + eps I - nu^2 S_AQ (S_Q + eps I)^-1 S_QA)
// An empty maximum is taken as 0, matching f(empty) = 0 on nonnegative
// kernels.
double ConditionalGainClosed(const SubmodularObjective& objective,
                             const IndexSet& a, const IndexSet& q);

}  // namespace combsel

#endif  // COMBSEL_SUBMODULAR_OBJECTIVE_HPP_
