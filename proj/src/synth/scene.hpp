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

#ifndef COMBSEL_SYNTH_SCENE_HPP_
#define COMBSEL_SYNTH_SCENE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "core/embedding.hpp"
#include "core/index_set.hpp"

namespace combsel {

enum class SceneRole { kKnown, kUnknown, kBackground };

SceneRole ParseSceneRole(std::string_view name);
std::string_view SceneRoleName(SceneRole role);

// One isotropic normal cluster. A cluster without an explicit count shares the
// remainder of its role's quota with the other count-less clusters.
struct ClusterSpec {
  SceneRole role = SceneRole::kBackground;
  int label = 1;  // class id, only meaningful for known clusters
  std::vector<double> mean;
  double stddev = 1.0;
  std::optional<std::size_t> count;
};

struct ObjectnessBand {
  double lo = 0.0;
  double hi = 1.0;
};

struct SceneSpec {
  std::uint64_t seed = 0;
  std::size_t d = 2;
  std::size_t n_total = 500;
  std::size_t n_known = 10;
  std::size_t n_unknown = 40;
  std::vector<ClusterSpec> clusters;
  ObjectnessBand known_band{0.7, 1.0};
  ObjectnessBand unknown_band{0.3, 0.8};
  ObjectnessBand background_band{0.0, 0.4};
  double prototype_jitter = 0.01;

  // Default geometry: knowns at (4, 0), unknowns at (0, 4), a dense background
  // cluster at 240 degrees and diffuse background around the origin. Extra
  // dimensions are zero-mean.
  static SceneSpec Default(std::size_t d = 2);

  void Validate() const;
  // Per-cluster item counts after distributing role remainders.
  std::vector<std::size_t> ResolvedCounts() const;
};

struct Scene {
  EmbeddingSet items;       // labels = truth, objectness per role band
  EmbeddingSet prototypes;  // one jittered copy of each known item, labelled
};

// Items are drawn cluster by cluster from independent streams and then
// shuffled, so the row order carries no role information.
Scene GenerateScene(const SceneSpec& spec);

struct SeparationOptions {
  std::uint64_t seed = 0;
  std::size_t n_cases = 3;
  std::size_t d = 2;
  std::size_t n_known = 10;
  std::size_t n_unknown = 90;
  double radius = 4.0;
  double stddev = 0.5;
  double first_angle_deg = 30.0;  // angle between the two centers, case 1
  double last_angle_deg = 120.0;  // and in the final case

  void Validate() const;
};

struct SeparationCase {
  EmbeddingSet embeddings;  // knowns first (label 1), then unknowns (label 0)
  IndexSet known;
  IndexSet unknown;
  double center_distance = 0.0;
};

// Two imbalanced clusters whose centers move apart case by case while the
// within-cluster noise is reused verbatim.
std::vector<SeparationCase> GenerateSeparationCases(
    const SeparationOptions& options);

// rows x cols matrix of independent standard normals; a generic random
// instance for property tests and gradient checks.
EmbeddingSet RandomGaussian(std::size_t rows, std::size_t cols,
                            std::uint64_t seed);

}  // namespace combsel

#endif  // COMBSEL_SYNTH_SCENE_HPP_
