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

#include "core/embedding.hpp"

#include <cmath>
#include <string>

#include "core/error.hpp"

namespace combsel {

EmbeddingSet::EmbeddingSet(std::size_t rows, std::size_t cols,
                           std::vector<double> data,
                           std::optional<std::vector<int>> labels,
                           std::optional<std::vector<double>> objectness)
    : rows_(rows),
      cols_(cols),
      data_(std::move(data)),
      labels_(std::move(labels)),
      objectness_(std::move(objectness)) {
  if (cols_ < 1) throw InvalidArgument("embedding dimension must be >= 1");
  if (data_.size() != rows_ * cols_) {
    throw InvalidArgument("embedding data has " +
                          std::to_string(data_.size()) + " values, expected " +
                          std::to_string(rows_ * cols_));
  }
  for (std::size_t k = 0; k < data_.size(); ++k) {
    if (!std::isfinite(data_[k])) {
      throw InvalidArgument("non-finite embedding entry in row " +
                            std::to_string(k / cols_));
    }
  }
  if (labels_ && labels_->size() != rows_) {
    throw InvalidArgument("label count does not match row count");
  }
  if (objectness_) {
    if (objectness_->size() != rows_) {
      throw InvalidArgument("objectness count does not match row count");
    }
    for (std::size_t i = 0; i < rows_; ++i) {
      const double s = (*objectness_)[i];
      if (!(s >= 0.0 && s <= 1.0)) {
        throw InvalidArgument("objectness of row " + std::to_string(i) +
                              " outside [0,1]");
      }
    }
  }
}

const std::vector<int>& EmbeddingSet::labels() const {
  if (!labels_) throw InvalidArgument("embedding set carries no labels");
  return *labels_;
}

const std::vector<double>& EmbeddingSet::objectness() const {
  if (!objectness_) {
    throw InvalidArgument("embedding set carries no objectness column");
  }
  return *objectness_;
}

EmbeddingSet EmbeddingSet::WithData(std::vector<double> data) const {
  return EmbeddingSet(rows_, cols_, std::move(data), labels_, objectness_);
}

double RowNorm(std::span<const double> row) {
  double sum = 0.0;
  for (double x : row) sum += x * x;
  return std::sqrt(sum);
}

EmbeddingSet RowNormalize(const EmbeddingSet& embeddings) {
  std::vector<double> out(embeddings.data().begin(), embeddings.data().end());
  const std::size_t d = embeddings.cols();
  for (std::size_t i = 0; i < embeddings.rows(); ++i) {
    const double norm = RowNorm(embeddings.row(i));
    if (!(norm > 0.0)) {
      throw InvalidArgument("zero-norm row " + std::to_string(i));
    }
    for (std::size_t j = 0; j < d; ++j) out[i * d + j] /= norm;
  }
  return embeddings.WithData(std::move(out));
}

}  // namespace combsel
