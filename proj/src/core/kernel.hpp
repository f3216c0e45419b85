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

#ifndef COMBSEL_CORE_KERNEL_HPP_
#define COMBSEL_CORE_KERNEL_HPP_

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "core/embedding.hpp"

namespace combsel {

enum class KernelTransform {
  kRawCosine,
  kClipAtZero,   // max(s, 0)
  kAffineShift,  // (1 + s) / 2
};

double ApplyTransform(double s, KernelTransform transform);

KernelTransform ParseTransform(std::string_view name);
std::string_view TransformName(KernelTransform transform);

// Dense symmetric N x N similarity matrix. `epsilon` records the diagonal
// regularizer the kernel was built for; it is not baked into the entries.
class SimilarityKernel {
 public:
  SimilarityKernel() = default;
  // Throws if the matrix is not square or not symmetric within 1e-12.
  SimilarityKernel(std::size_t n, std::vector<double> matrix,
                   KernelTransform transform, double epsilon);

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const {
    return matrix_[i * n_ + j];
  }
  std::span<const double> row(std::size_t i) const {
    return {matrix_.data() + i * n_, n_};
  }
  KernelTransform transform() const noexcept { return transform_; }
  double epsilon() const noexcept { return epsilon_; }

 private:
  std::size_t n_ = 0;
  std::vector<double> matrix_;
  KernelTransform transform_ = KernelTransform::kRawCosine;
  double epsilon_ = 0.0;
};

// s_ij = transform(<e_i, e_j> / (|e_i| |e_j|)). Each entry is computed
// independently from the normalized rows, so the result does not depend on
// evaluation order.
SimilarityKernel CosineKernel(const EmbeddingSet& embeddings,
                              KernelTransform transform, double epsilon = 0.0);

}  // namespace combsel

#endif  // COMBSEL_CORE_KERNEL_HPP_
