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

#include "submodular/marginal.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "core/error.hpp"

namespace combsel {

MarginalState::MarginalState(SubmodularObjective objective)
    : objective_(std::move(objective)),
      member_(objective_.kernel().size(), 0) {
  const SimilarityKernel& s = objective_.kernel();
  switch (objective_.family()) {
    case Family::kFacilityLocation:
      cache_ = FacilityCache{
          std::vector<double>(objective_.ground().size(),
                              -std::numeric_limits<double>::infinity())};
      break;
    case Family::kGraphCut: {
      GraphCutCache gc;
      gc.column_sum.assign(s.size(), 0.0);
      gc.cross.assign(s.size(), 0.0);
      for (Index i : objective_.ground()) {
        const auto row = s.row(i);
        for (std::size_t v = 0; v < s.size(); ++v) gc.column_sum[v] += row[v];
      }
      cache_ = std::move(gc);
      break;
    }
    case Family::kLogDeterminant:
      cache_ = LogDetCache{};
      break;
  }
}

bool MarginalState::contains(Index v) const {
  return v < member_.size() && member_[v] != 0;
}

void MarginalState::CheckCandidate(Index v) const {
  if (v >= member_.size()) {
    throw InvalidArgument("index " + std::to_string(v) + " out of range");
  }
  if (member_[v]) throw InvalidArgument("element already selected");
}

std::vector<double> MarginalState::SolveFactor(Index v) const {
  const auto& factor = std::get<LogDetCache>(cache_).factor;
  const SimilarityKernel& s = objective_.kernel();
  const std::size_t k = factor.size();
  std::vector<double> w(k);
  for (std::size_t r = 0; r < k; ++r) {
    double acc = s(selected_[r], v);
    for (std::size_t c = 0; c < r; ++c) acc -= factor[r][c] * w[c];
    w[r] = acc / factor[r][r];
  }
  return w;
}

double MarginalState::Gain(Index v) const {
  CheckCandidate(v);
  const SimilarityKernel& s = objective_.kernel();
  switch (objective_.family()) {
    case Family::kFacilityLocation: {
      const auto& best = std::get<FacilityCache>(cache_).best;
      const IndexSet& ground = objective_.ground();
      double gain = 0.0;
      if (selected_.empty()) {
        for (Index i : ground) gain += s(i, v);
      } else {
        for (std::size_t p = 0; p < ground.size(); ++p) {
          const double delta = s(ground[p], v) - best[p];
          if (delta > 0.0) gain += delta;
        }
      }
      return gain;
    }
    case Family::kGraphCut: {
      const auto& gc = std::get<GraphCutCache>(cache_);
      const double lambda = objective_.params().lambda;
      return gc.column_sum[v] - lambda * s(v, v) - 2.0 * lambda * gc.cross[v];
    }
    case Family::kLogDeterminant: {
      const std::vector<double> w = SolveFactor(v);
      double norm2 = 0.0;
      for (double x : w) norm2 += x * x;
      const double schur = s(v, v) + objective_.params().epsilon - norm2;
      if (!(schur > 0.0)) return -std::numeric_limits<double>::infinity();
      return std::log(schur);
    }
  }
  return 0.0;
}

void MarginalState::Commit(Index v) {
  const double gain = Gain(v);
  const SimilarityKernel& s = objective_.kernel();
  switch (objective_.family()) {
    case Family::kFacilityLocation: {
      auto& best = std::get<FacilityCache>(cache_).best;
      const IndexSet& ground = objective_.ground();
      for (std::size_t p = 0; p < ground.size(); ++p) {
        best[p] = std::max(best[p], s(ground[p], v));
      }
      break;
    }
    case Family::kGraphCut: {
      auto& cross = std::get<GraphCutCache>(cache_).cross;
      const auto row = s.row(v);
      for (std::size_t u = 0; u < cross.size(); ++u) cross[u] += row[u];
      break;
    }
    case Family::kLogDeterminant: {
      if (!std::isfinite(gain)) throw NumericError("singular kernel submatrix");
      std::vector<double> w = SolveFactor(v);
      double norm2 = 0.0;
      for (double x : w) norm2 += x * x;
      w.push_back(std::sqrt(s(v, v) + objective_.params().epsilon - norm2));
      std::get<LogDetCache>(cache_).factor.push_back(std::move(w));
      break;
    }
  }
  std::vector<Index> items = selected_.items();
  items.push_back(v);
  selected_ = IndexSet(std::move(items));
  member_[v] = 1;
  value_ += gain;
}

MarginalState MarginalState::Committed(Index v) const {
  MarginalState next = *this;
  next.Commit(v);
  return next;
}

}  // namespace combsel
