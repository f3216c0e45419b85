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

#include "synth/scene.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "core/error.hpp"
#include "core/rng.hpp"

namespace combsel {
namespace {

// Stream ids. Cluster c draws positions from stream c and objectness from
// kObjectnessStream + c, so appending clusters leaves earlier draws intact.
constexpr std::uint64_t kObjectnessStream = std::uint64_t{1} << 32;
constexpr std::uint64_t kShuffleStream = std::uint64_t{1} << 40;
constexpr std::uint64_t kPrototypeStream = (std::uint64_t{1} << 40) + 1;

std::size_t RoleTarget(const SceneSpec& spec, SceneRole role) {
  switch (role) {
    case SceneRole::kKnown:
      return spec.n_known;
    case SceneRole::kUnknown:
      return spec.n_unknown;
    case SceneRole::kBackground:
      return spec.n_total - spec.n_known - spec.n_unknown;
  }
  return 0;
}

const ObjectnessBand& BandFor(const SceneSpec& spec, SceneRole role) {
  switch (role) {
    case SceneRole::kKnown:
      return spec.known_band;
    case SceneRole::kUnknown:
      return spec.unknown_band;
    case SceneRole::kBackground:
      break;
  }
  return spec.background_band;
}

void CheckBand(const ObjectnessBand& band, const char* name) {
  if (!(band.lo >= 0.0 && band.hi <= 1.0 && band.lo <= band.hi)) {
    throw InvalidArgument(std::string(name) +
                          " objectness band must satisfy 0 <= lo <= hi <= 1");
  }
}

std::vector<double> Padded(std::initializer_list<double> head, std::size_t d) {
  std::vector<double> out(d, 0.0);
  std::size_t i = 0;
  for (double v : head) {
    if (i < d) out[i++] = v;
  }
  return out;
}

}  // namespace

SceneRole ParseSceneRole(std::string_view name) {
  if (name == "known") return SceneRole::kKnown;
  if (name == "unknown") return SceneRole::kUnknown;
  if (name == "background") return SceneRole::kBackground;
  throw InvalidArgument("unknown cluster role '" + std::string(name) + "'");
}

std::string_view SceneRoleName(SceneRole role) {
  switch (role) {
    case SceneRole::kKnown:
      return "known";
    case SceneRole::kUnknown:
      return "unknown";
    case SceneRole::kBackground:
      break;
  }
  return "background";
}

SceneSpec SceneSpec::Default(std::size_t d) {
  if (d == 0) throw InvalidArgument("scene dimension must be >= 1");
  SceneSpec spec;
  spec.d = d;
  const double far = 4.0;
  const double c240 = far * std::cos(4.0 * std::numbers::pi / 3.0);
  const double s240 = far * std::sin(4.0 * std::numbers::pi / 3.0);
  spec.clusters = {
      {SceneRole::kKnown, 1, Padded({far, 0.0}, d), 0.5, std::nullopt},
      {SceneRole::kUnknown, 0, Padded({0.0, far}, d), 0.5, std::nullopt},
      {SceneRole::kBackground, 0, Padded({c240, s240}, d), 0.8, 200},
      {SceneRole::kBackground, 0, Padded({0.0, 0.0}, d), 1.0, std::nullopt},
  };
  return spec;
}

std::vector<std::size_t> SceneSpec::ResolvedCounts() const {
  std::vector<std::size_t> counts(clusters.size(), 0);
  for (SceneRole role :
       {SceneRole::kKnown, SceneRole::kUnknown, SceneRole::kBackground}) {
    const std::size_t target = RoleTarget(*this, role);
    std::size_t fixed = 0;
    std::vector<std::size_t> open;
    for (std::size_t c = 0; c < clusters.size(); ++c) {
      if (clusters[c].role != role) continue;
      if (clusters[c].count) {
        counts[c] = *clusters[c].count;
        fixed += counts[c];
      } else {
        open.push_back(c);
      }
    }
    const std::string name(SceneRoleName(role));
    if (fixed > target || (open.empty() && fixed != target)) {
      throw InvalidArgument(name + " cluster counts sum to " +
                            std::to_string(fixed) + " but the scene needs " +
                            std::to_string(target));
    }
    if (open.empty()) continue;
    const std::size_t rest = target - fixed;
    for (std::size_t i = 0; i < open.size(); ++i) {
      counts[open[i]] = rest / open.size() + (i < rest % open.size() ? 1 : 0);
    }
  }
  return counts;
}

void SceneSpec::Validate() const {
  if (d == 0) throw InvalidArgument("scene dimension must be >= 1");
  if (n_total == 0) throw InvalidArgument("n_total must be >= 1");
  if (n_known + n_unknown > n_total) {
    throw InvalidArgument("n_known + n_unknown exceeds n_total");
  }
  if (n_known == 0) throw InvalidArgument("a scene needs at least one known item");
  if (!(prototype_jitter >= 0.0 && std::isfinite(prototype_jitter))) {
    throw InvalidArgument("prototype_jitter must be finite and >= 0");
  }
  CheckBand(known_band, "known");
  CheckBand(unknown_band, "unknown");
  CheckBand(background_band, "background");
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    const ClusterSpec& cl = clusters[c];
    const std::string where = "cluster " + std::to_string(c);
    if (cl.mean.size() != d) {
      throw InvalidArgument(where + " mean has dimension " +
                            std::to_string(cl.mean.size()) + ", expected " +
                            std::to_string(d));
    }
    for (double m : cl.mean) {
      if (!std::isfinite(m)) throw InvalidArgument(where + " mean is not finite");
    }
    if (!(cl.stddev >= 0.0 && std::isfinite(cl.stddev))) {
      throw InvalidArgument(where + " stddev must be finite and >= 0");
    }
    if (cl.role == SceneRole::kKnown && cl.label < 1) {
      throw InvalidArgument(where + " known label must be >= 1");
    }
  }
  ResolvedCounts();
}

Scene GenerateScene(const SceneSpec& spec) {
  spec.Validate();
  const std::vector<std::size_t> counts = spec.ResolvedCounts();
  const std::size_t n = spec.n_total;
  const std::size_t d = spec.d;

  std::vector<double> data;
  std::vector<int> labels;
  std::vector<double> objectness;
  data.reserve(n * d);
  for (std::size_t c = 0; c < spec.clusters.size(); ++c) {
    const ClusterSpec& cl = spec.clusters[c];
    Xoshiro256 pos = Xoshiro256::Stream(spec.seed, c);
    Xoshiro256 obj = Xoshiro256::Stream(spec.seed, kObjectnessStream + c);
    const ObjectnessBand& band = BandFor(spec, cl.role);
    const int label = cl.role == SceneRole::kKnown     ? cl.label
                      : cl.role == SceneRole::kUnknown ? kUnknownLabel
                                                       : kBackgroundLabel;
    for (std::size_t i = 0; i < counts[c]; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        data.push_back(cl.mean[j] + cl.stddev * pos.Normal());
      }
      labels.push_back(label);
      objectness.push_back(obj.Uniform(band.lo, band.hi));
    }
  }

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  Xoshiro256 shuffle = Xoshiro256::Stream(spec.seed, kShuffleStream);
  for (std::size_t i = n; i > 1; --i) {
    std::swap(order[i - 1], order[shuffle.Below(i)]);
  }

  std::vector<double> s_data(n * d);
  std::vector<int> s_labels(n);
  std::vector<double> s_obj(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t src = order[i];
    for (std::size_t j = 0; j < d; ++j) s_data[i * d + j] = data[src * d + j];
    s_labels[i] = labels[src];
    s_obj[i] = objectness[src];
  }

  std::vector<double> p_data;
  std::vector<int> p_labels;
  Xoshiro256 jitter = Xoshiro256::Stream(spec.seed, kPrototypeStream);
  for (std::size_t i = 0; i < n; ++i) {
    if (s_labels[i] < 1) continue;
    for (std::size_t j = 0; j < d; ++j) {
      p_data.push_back(s_data[i * d + j] + spec.prototype_jitter * jitter.Normal());
    }
    p_labels.push_back(s_labels[i]);
  }
  const std::size_t n_proto = p_labels.size();

  return Scene{
      EmbeddingSet(n, d, std::move(s_data), std::move(s_labels), std::move(s_obj)),
      EmbeddingSet(n_proto, d, std::move(p_data), std::move(p_labels))};
}

void SeparationOptions::Validate() const {
  if (n_cases < 2) throw InvalidArgument("n_cases must be >= 2");
  if (d < 2) throw InvalidArgument("separation cases need d >= 2");
  if (n_known == 0 || n_unknown == 0) {
    throw InvalidArgument("both clusters need at least one item");
  }
  if (!(radius > 0.0) || !(stddev >= 0.0)) {
    throw InvalidArgument("radius must be > 0 and stddev >= 0");
  }
  if (!(0.0 < first_angle_deg && first_angle_deg < last_angle_deg &&
        last_angle_deg <= 180.0)) {
    throw InvalidArgument("angles must satisfy 0 < first < last <= 180");
  }
}

std::vector<SeparationCase> GenerateSeparationCases(
    const SeparationOptions& options) {
  options.Validate();
  const std::size_t d = options.d;
  const std::size_t nk = options.n_known;
  const std::size_t nu = options.n_unknown;
  const std::size_t n = nk + nu;

  // Noise is drawn once and reused by every case.
  std::vector<double> noise(n * d);
  Xoshiro256 known_rng = Xoshiro256::Stream(options.seed, 0);
  Xoshiro256 unknown_rng = Xoshiro256::Stream(options.seed, 1);
  for (std::size_t i = 0; i < n * d; ++i) {
    noise[i] = options.stddev * (i < nk * d ? known_rng : unknown_rng).Normal();
  }

  std::vector<int> labels(n, kUnknownLabel);
  std::vector<Index> known_idx(nk), unknown_idx(nu);
  for (std::size_t i = 0; i < nk; ++i) {
    labels[i] = 1;
    known_idx[i] = i;
  }
  for (std::size_t i = 0; i < nu; ++i) unknown_idx[i] = nk + i;

  std::vector<SeparationCase> cases;
  for (std::size_t c = 0; c < options.n_cases; ++c) {
    const double t = static_cast<double>(c) / static_cast<double>(options.n_cases - 1);
    const double deg = options.first_angle_deg +
                       t * (options.last_angle_deg - options.first_angle_deg);
    const double rad = deg * std::numbers::pi / 180.0;
    std::vector<double> data = noise;
    for (std::size_t i = 0; i < n; ++i) {
      if (i < nk) {
        data[i * d] += options.radius;
      } else {
        data[i * d] += options.radius * std::cos(rad);
        data[i * d + 1] += options.radius * std::sin(rad);
      }
    }
    cases.push_back(SeparationCase{
        EmbeddingSet(n, d, std::move(data), labels),
        IndexSet(known_idx), IndexSet(unknown_idx),
        2.0 * options.radius * std::sin(rad / 2.0)});
  }
  return cases;
}

EmbeddingSet RandomGaussian(std::size_t rows, std::size_t cols,
                            std::uint64_t seed) {
  if (cols == 0) throw InvalidArgument("cols must be >= 1");
  Xoshiro256 rng(seed);
  std::vector<double> data(rows * cols);
  for (double& x : data) x = rng.Normal();
  return EmbeddingSet(rows, cols, std::move(data));
}

}  // namespace combsel
