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

#ifndef COMBSEL_DISCOVER_DISCOVERY_HPP_
#define COMBSEL_DISCOVER_DISCOVERY_HPP_

#include <memory>
#include <span>
#include <string>

#include "core/embedding.hpp"
#include "core/error.hpp"
#include "core/index_set.hpp"
#include "core/kernel.hpp"
#include "maximize/maximize.hpp"
#include "submodular/objective.hpp"

namespace combsel {

struct DiscoveryConfig {
  double tau_e = 0.2;   // objectness exclusion threshold (inclusive)
  double tau_b = 0.30;  // background budget as a fraction of the pool
  std::size_t k = 10;   // unknown budget
  Family family = Family::kGraphCut;
  ObjectiveParams params;
  bool exclude_background_from_pool = true;
  bool lazy = true;  // lazy greedy; output is identical to naive greedy

  void Validate() const;
};

// Failure inside one pipeline stage; what() is prefixed with the stage name.
class StageError : public Error {
 public:
  StageError(std::string stage, const std::string& message)
      : Error(ErrorCode::kStage, "stage '" + stage + "': " + message),
        stage_(std::move(stage)) {}
  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

struct DiscoveryResult {
  IndexSet kept;        // items passing the objectness filter
  IndexSet known;       // matched known items, one per prototype
  IndexSet background;  // selected background
  IndexSet unknown;     // selected unknowns
  IndexSet unknown_pool;  // candidates offered to the unknown stage
  SelectionResult background_trace;
  SelectionResult unknown_trace;
  std::shared_ptr<const SimilarityKernel> kernel;
};

struct CoverageMetrics {
  double purity = 0.0;    // fraction of selected unknowns that are truly unknown
  double coverage = 0.0;  // fraction of true unknowns that were selected
  double mean_sim_to_known = 0.0;
  double mean_sim_to_background = 0.0;
  double pool_prevalence = 0.0;  // unknown fraction of the unknown-stage pool
};

// Indices with objectness >= tau_e.
IndexSet FilterByObjectness(const EmbeddingSet& embeddings, double tau_e);

// One kept item per prototype, by minimum-cost assignment on
// 1 - cosine(item, prototype). Returned in prototype order.
IndexSet MatchKnowns(const EmbeddingSet& embeddings, const IndexSet& kept,
                     const EmbeddingSet& prototypes);

// floor(tau_b * pool_size), robust to representation error in tau_b.
std::size_t BackgroundBudget(double tau_b, std::size_t pool_size);

// argmax H_f(B | known) with |B| = floor(tau_b |pool|).
SelectionResult SelectBackground(const SubmodularObjective& objective,
                                 const IndexSet& pool, const IndexSet& known,
                                 double tau_b, bool lazy = true);

// argmax H_f(U | known u background) with |U| = min(k, |pool|).
SelectionResult SelectUnknowns(const SubmodularObjective& objective,
                               const IndexSet& pool, const IndexSet& known,
                               const IndexSet& background, std::size_t k,
                               bool lazy = true,
                               GreedyOptions options = {});

// Similarity kernel used by the pipeline for a given family.
SimilarityKernel DiscoveryKernel(const EmbeddingSet& embeddings,
                                 const DiscoveryConfig& config);

DiscoveryResult RunDiscovery(const EmbeddingSet& embeddings,
                             const EmbeddingSet& prototypes,
                             const DiscoveryConfig& config);

CoverageMetrics ComputeCoverageMetrics(const DiscoveryResult& result,
                                       std::span<const int> truth);

}  // namespace combsel

#endif  // COMBSEL_DISCOVER_DISCOVERY_HPP_
