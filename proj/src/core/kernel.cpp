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

#include "core/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "core/error.hpp"

namespace combsel {

double ApplyTransform(double s, KernelTransform transform) {
  switch (transform) {
    case KernelTransform::kRawCosine:
      return s;
    case KernelTransform::kClipAtZero:
      return std::max(s, 0.0);
    case KernelTransform::kAffineShift:
      return 0.5 * (1.0 + s);
  }
  return s;
}

KernelTransform ParseTransform(std::string_view name) {
  if (name == "raw-cosine" || name == "raw") return KernelTransform::kRawCosine;
  if (name == "clip-at-zero" || name == "clip") {
    return KernelTransform::kClipAtZero;
  }
  if (name == "affine-shift" || name == "affine") {
    return KernelTransform::kAffineShift;
  }
  throw InvalidArgument("unknown kernel transform '" + std::string(name) + "'");
}

std::string_view TransformName(KernelTransform transform) {
  switch (transform) {
    case KernelTransform::kRawCosine:
      return "raw-cosine";
    case KernelTransform::kClipAtZero:
      return "clip-at-zero";
    case KernelTransform::kAffineShift:
      return "affine-shift";
  }
  return "raw-cosine";
}

SimilarityKernel::SimilarityKernel(std::size_t n, std::vector<double> matrix,
                                   KernelTransform transform, double epsilon)
    : n_(n), matrix_(std::move(matrix)), transform_(transform),
      epsilon_(epsilon) {
  if (matrix_.size() != n_ * n_) {
    throw InvalidArgument("kernel matrix is not square");
  }
  if (!(epsilon_ >= 0.0)) throw InvalidArgument("kernel epsilon must be >= 0");
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (std::abs(matrix_[i * n_ + j] - matrix_[j * n_ + i]) >= 1e-12) {
        throw InvalidArgument("kernel matrix is not symmetric at (" +
                              std::to_string(i) + "," + std::to_string(j) +
                              ")");
      }
    }
  }
}

SimilarityKernel CosineKernel(const EmbeddingSet& embeddings,
                              KernelTransform transform, double epsilon) {
  const EmbeddingSet unit = RowNormalize(embeddings);
  const std::size_t n = unit.rows();
  const std::size_t d = unit.cols();
  std::vector<double> matrix(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto ei = unit.row(i);
    matrix[i * n + i] = ApplyTransform(1.0, transform);
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto ej = unit.row(j);
      double dot = 0.0;
      for (std::size_t c = 0; c < d; ++c) dot += ei[c] * ej[c];
      dot = std::clamp(dot, -1.0, 1.0);
      const double s = ApplyTransform(dot, transform);
      matrix[i * n + j] = s;
      matrix[j * n + i] = s;
    }
  }
  return SimilarityKernel(n, std::move(matrix), transform, epsilon);
}

}  // namespace combsel
