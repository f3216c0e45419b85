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

#include "discover/discovery.hpp"

#include <cmath>
#include <string>

#include "discover/hungarian.hpp"

namespace combsel {
namespace {

template <typename Fn>
auto RunStage(const char* stage, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const StageError&) {
    throw;
  } catch (const std::exception& e) {
    throw StageError(stage, e.what());
  }
}

SelectionResult Maximize(const SubmodularObjective& objective,
                         const IndexSet& pool, std::size_t budget,
                         const IndexSet& conditioning, bool lazy,
                         GreedyOptions options) {
  return lazy ? LazyGreedyMax(objective, pool, budget, conditioning, options)
              : GreedyMax(objective, pool, budget, conditioning, options);
}

double MeanCross(const SimilarityKernel& s, const IndexSet& a,
                 const IndexSet& b) {
  if (a.empty() || b.empty()) return 0.0;
  double total = 0.0;
  for (Index i : a) {
    for (Index j : b) total += s(i, j);
  }
  return total / static_cast<double>(a.size() * b.size());
}

}  // namespace

void DiscoveryConfig::Validate() const {
  if (!(tau_e >= 0.0 && tau_e <= 1.0)) {
    throw InvalidArgument("tau_e must lie in [0,1]");
  }
  if (!(tau_b >= 0.0 && tau_b <= 1.0)) {
    throw InvalidArgument("tau_b must lie in [0,1]");
  }
  if (!(params.lambda >= 0.0)) throw InvalidArgument("lambda must be >= 0");
  if (!(params.nu >= 0.0)) throw InvalidArgument("nu must be >= 0");
  if (!(params.epsilon >= 0.0)) throw InvalidArgument("epsilon must be >= 0");
}

IndexSet FilterByObjectness(const EmbeddingSet& embeddings, double tau_e) {
  const auto& scores = embeddings.objectness();
  std::vector<Index> kept;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (scores[i] >= tau_e) kept.push_back(i);
  }
  return IndexSet(std::move(kept));
}

IndexSet MatchKnowns(const EmbeddingSet& embeddings, const IndexSet& kept,
                     const EmbeddingSet& prototypes) {
  if (kept.empty()) throw InvalidArgument("no kept items to match");
  if (prototypes.rows() == 0) return {};
  if (prototypes.cols() != embeddings.cols()) {
    throw InvalidArgument("prototype dimension does not match embeddings");
  }
  for (int label : prototypes.labels()) {
    if (label < 1) throw InvalidArgument("prototype label must be a known class id");
  }
  if (prototypes.rows() > kept.size()) {
    throw InvalidArgument("more prototypes (" +
                          std::to_string(prototypes.rows()) +
                          ") than kept items (" + std::to_string(kept.size()) +
                          ")");
  }
  kept.CheckBound(embeddings.rows());
  const EmbeddingSet items = RowNormalize(embeddings);
  const EmbeddingSet protos = RowNormalize(prototypes);
  const std::size_t rows = kept.size();
  const std::size_t cols = protos.rows();
  const std::size_t d = items.cols();
  std::vector<double> cost(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto e = items.row(kept[r]);
    for (std::size_t c = 0; c < cols; ++c) {
      const auto p = protos.row(c);
      double dot = 0.0;
      for (std::size_t t = 0; t < d; ++t) dot += e[t] * p[t];
      cost[r * cols + c] = 1.0 - dot;
    }
  }
  const Assignment assignment = HungarianAssign(cost, rows, cols);
  std::vector<Index> by_prototype(cols);
  for (const auto& [r, c] : assignment.pairs) by_prototype[c] = kept[r];
  return IndexSet(std::move(by_prototype));
}

std::size_t BackgroundBudget(double tau_b, std::size_t pool_size) {
  const double raw = tau_b * static_cast<double>(pool_size);
  const auto budget = static_cast<std::size_t>(std::floor(raw + 1e-9));
  return std::min(budget, pool_size);
}

SelectionResult SelectBackground(const SubmodularObjective& objective,
                                 const IndexSet& pool, const IndexSet& known,
                                 double tau_b, bool lazy) {
  if (!Disjoint(pool, known)) {
    throw InvalidArgument("background pool intersects the known set");
  }
  return Maximize(objective, pool, BackgroundBudget(tau_b, pool.size()), known,
                  lazy, {});
}

SelectionResult SelectUnknowns(const SubmodularObjective& objective,
                               const IndexSet& pool, const IndexSet& known,
                               const IndexSet& background, std::size_t k,
                               bool lazy, GreedyOptions options) {
  if (!Disjoint(known, background)) {
    throw InvalidArgument("known and background sets overlap");
  }
  return Maximize(objective, pool, k, Union(known, background), lazy, options);
}

SimilarityKernel DiscoveryKernel(const EmbeddingSet& embeddings,
                                 const DiscoveryConfig& config) {
  if (config.family == Family::kLogDeterminant) {
    return CosineKernel(embeddings, KernelTransform::kRawCosine,
                        config.params.epsilon);
  }
  return CosineKernel(embeddings, KernelTransform::kClipAtZero, 0.0);
}

DiscoveryResult RunDiscovery(const EmbeddingSet& embeddings,
                             const EmbeddingSet& prototypes,
                             const DiscoveryConfig& config) {
  RunStage("config", [&] {
    config.Validate();
    return 0;
  });
  DiscoveryResult result;
  result.kept = RunStage("filter", [&] {
    IndexSet kept = FilterByObjectness(embeddings, config.tau_e);
    if (kept.empty()) throw InvalidArgument("empty set after filtering");
    return kept;
  });
  result.known = RunStage(
      "match", [&] { return MatchKnowns(embeddings, result.kept, prototypes); });
  const IndexSet pool = Difference(result.kept, result.known);

  result.kernel = RunStage("kernel", [&] {
    return std::make_shared<const SimilarityKernel>(
        DiscoveryKernel(embeddings, config));
  });
  const SubmodularObjective objective(config.family, result.kernel, pool,
                                      config.params);

  result.background_trace = RunStage("background", [&] {
    return SelectBackground(objective, pool, result.known, config.tau_b,
                            config.lazy);
  });
  result.background = result.background_trace.selected;

  result.unknown_pool = config.exclude_background_from_pool
                            ? Difference(pool, result.background)
                            : pool;
  result.unknown_trace = RunStage("unknown", [&] {
    GreedyOptions options;
    options.allow_conditioned_candidates = !config.exclude_background_from_pool;
    return SelectUnknowns(objective, result.unknown_pool, result.known,
                          result.background, config.k, config.lazy, options);
  });
  result.unknown = result.unknown_trace.selected;
  return result;
}

CoverageMetrics ComputeCoverageMetrics(const DiscoveryResult& result,
                                       std::span<const int> truth) {
  CoverageMetrics m;
  std::size_t true_unknown = 0;
  for (int label : truth) true_unknown += (label == kUnknownLabel);
  std::size_t hits = 0;
  for (Index i : result.unknown) {
    if (i < truth.size() && truth[i] == kUnknownLabel) ++hits;
  }
  if (!result.unknown.empty()) {
    m.purity = static_cast<double>(hits) / result.unknown.size();
  }
  if (true_unknown > 0) {
    m.coverage = static_cast<double>(hits) / true_unknown;
  }
  if (result.kernel) {
    m.mean_sim_to_known = MeanCross(*result.kernel, result.unknown, result.known);
    m.mean_sim_to_background =
        MeanCross(*result.kernel, result.unknown, result.background);
  }
  const IndexSet& pool = result.unknown_pool;
  std::size_t pool_unknown = 0;
  for (Index i : pool) {
    if (i < truth.size() && truth[i] == kUnknownLabel) ++pool_unknown;
  }
  if (!pool.empty()) {
    m.pool_prevalence = static_cast<double>(pool_unknown) / pool.size();
  }
  return m;
}

}  // namespace combsel
