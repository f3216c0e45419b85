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

#include "submodular/objective.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "core/error.hpp"

namespace combsel {
namespace {

Eigen::MatrixXd Submatrix(const SimilarityKernel& kernel, const IndexSet& rows,
                          const IndexSet& cols) {
  Eigen::MatrixXd out(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      out(r, c) = kernel(rows[r], cols[c]);
    }
  }
  return out;
}

double LogDetPd(const Eigen::MatrixXd& m) {
  Eigen::LLT<Eigen::MatrixXd> llt(m);
  if (llt.info() != Eigen::Success) {
    throw NumericError("singular kernel submatrix");
  }
  const auto& l = llt.matrixL();
  double sum = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    const double diag = l(i, i);
    if (!(diag > 0.0) || !std::isfinite(diag)) {
      throw NumericError("singular kernel submatrix");
    }
    sum += 2.0 * std::log(diag);
  }
  return sum;
}

double MaxOver(const SimilarityKernel& kernel, Index n, const IndexSet& set) {
  if (set.empty()) return 0.0;
  double best = -std::numeric_limits<double>::infinity();
  for (Index j : set) best = std::max(best, kernel(n, j));
  return best;
}

}  // namespace

Family ParseFamily(std::string_view name) {
  if (name == "fl" || name == "flcg" || name == "facility-location") {
    return Family::kFacilityLocation;
  }
  if (name == "gc" || name == "gccg" || name == "graph-cut") {
    return Family::kGraphCut;
  }
  if (name == "logdet" || name == "logdetcg" || name == "log-determinant") {
    return Family::kLogDeterminant;
  }
  throw InvalidArgument("unknown submodular family '" + std::string(name) + "'");
}

std::string_view FamilyName(Family family) {
  switch (family) {
    case Family::kFacilityLocation:
      return "fl";
    case Family::kGraphCut:
      return "gc";
    case Family::kLogDeterminant:
      return "logdet";
  }
  return "fl";
}

SubmodularObjective::SubmodularObjective(
    Family family, std::shared_ptr<const SimilarityKernel> kernel,
    IndexSet ground, ObjectiveParams params)
    : family_(family), kernel_(std::move(kernel)), ground_(std::move(ground)),
      params_(params) {
  if (!kernel_) throw InvalidArgument("objective requires a kernel");
  ground_.CheckBound(kernel_->size());
  if (!(params_.lambda >= 0.0)) throw InvalidArgument("lambda must be >= 0");
  if (!(params_.nu >= 0.0)) throw InvalidArgument("nu must be >= 0");
  if (!(params_.epsilon >= 0.0)) throw InvalidArgument("epsilon must be >= 0");
}

double Evaluate(const SubmodularObjective& objective, const IndexSet& set) {
  const SimilarityKernel& s = objective.kernel();
  set.CheckBound(s.size());
  if (set.empty()) return 0.0;
  switch (objective.family()) {
    case Family::kFacilityLocation: {
      double total = 0.0;
      for (Index i : objective.ground()) total += MaxOver(s, i, set);
      return total;
    }
    case Family::kGraphCut: {
      double relevance = 0.0;
      for (Index i : objective.ground()) {
        for (Index j : set) relevance += s(i, j);
      }
      double redundancy = 0.0;
      for (Index i : set) {
        for (Index j : set) redundancy += s(i, j);
      }
      return relevance - objective.params().lambda * redundancy;
    }
    case Family::kLogDeterminant: {
      Eigen::MatrixXd m = Submatrix(s, set, set);
      m.diagonal().array() += objective.params().epsilon;
      return LogDetPd(m);
    }
  }
  return 0.0;
}

double TotalInformation(const SubmodularObjective& objective,
                        std::span<const IndexSet> sets) {
  double total = 0.0;
  for (const IndexSet& set : sets) total += Evaluate(objective, set);
  return total;
}

double ConditionalGainDefinitional(const SubmodularObjective& objective,
                                   const IndexSet& a, const IndexSet& q) {
  if (!Disjoint(a, q)) throw InvalidArgument("conditioning sets overlap");
  return Evaluate(objective, Union(a, q)) - Evaluate(objective, q);
}

double ConditionalGainClosed(const SubmodularObjective& objective,
                             const IndexSet& a, const IndexSet& q) {
  if (!Disjoint(a, q)) throw InvalidArgument("conditioning sets overlap");
  const SimilarityKernel& s = objective.kernel();
  a.CheckBound(s.size());
  q.CheckBound(s.size());
  const ObjectiveParams& p = objective.params();
  switch (objective.family()) {
    case Family::kGraphCut: {
      double cross = 0.0;
      for (Index i : a) {
        for (Index j : q) cross += s(i, j);
      }
      return Evaluate(objective, a) - 2.0 * p.lambda * p.nu * cross;
    }
    case Family::kFacilityLocation: {
      double total = 0.0;
      for (Index n : objective.ground()) {
        total += std::max(MaxOver(s, n, a) - p.nu * MaxOver(s, n, q), 0.0);
      }
      return total;
    }
    case Family::kLogDeterminant: {
      if (a.empty()) return 0.0;
      Eigen::MatrixXd m = Submatrix(s, a, a);
      m.diagonal().array() += p.epsilon;
      if (!q.empty()) {
        Eigen::MatrixXd sq = Submatrix(s, q, q);
        sq.diagonal().array() += p.epsilon;
        Eigen::LLT<Eigen::MatrixXd> llt(sq);
        if (llt.info() != Eigen::Success) {
          throw NumericError("singular kernel submatrix");
        }
        const Eigen::MatrixXd saq = Submatrix(s, a, q);
        const Eigen::MatrixXd solved = llt.solve(saq.transpose());
        m -= p.nu * p.nu * (saq * solved);
        m = 0.5 * (m + m.transpose());
      }
      return LogDetPd(m);
    }
  }
  return 0.0;
}

}  // namespace combsel
