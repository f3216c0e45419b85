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

#ifndef COMBSEL_CORE_EMBEDDING_HPP_
#define COMBSEL_CORE_EMBEDDING_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace combsel {

// Item label convention shared by scenes, CSV files and metrics.
inline constexpr int kUnknownLabel = 0;
inline constexpr int kBackgroundLabel = -1;

// Immutable N x d matrix of item embeddings with optional per-item labels
// (known class id >= 1, unknown 0, background -1) and objectness in [0, 1].
class EmbeddingSet {
 public:
  EmbeddingSet() = default;

  // Validates shapes and finiteness; throws combsel::Error on violation.
  EmbeddingSet(std::size_t rows, std::size_t cols, std::vector<double> data,
               std::optional<std::vector<int>> labels = std::nullopt,
               std::optional<std::vector<double>> objectness = std::nullopt);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  double at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<const double> data() const noexcept { return data_; }

  bool has_labels() const noexcept { return labels_.has_value(); }
  bool has_objectness() const noexcept { return objectness_.has_value(); }
  const std::vector<int>& labels() const;
  const std::vector<double>& objectness() const;

  EmbeddingSet WithData(std::vector<double> data) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 1;
  std::vector<double> data_;
  std::optional<std::vector<int>> labels_;
  std::optional<std::vector<double>> objectness_;
};

double RowNorm(std::span<const double> row);

// Scales every row to unit Euclidean norm. Throws "zero-norm row <i>".
EmbeddingSet RowNormalize(const EmbeddingSet& embeddings);

}  // namespace combsel

#endif  // COMBSEL_CORE_EMBEDDING_HPP_
