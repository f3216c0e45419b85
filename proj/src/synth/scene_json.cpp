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

#include "synth/scene_json.hpp"

#include <set>
#include <string>

#include "core/error.hpp"

namespace combsel {
namespace {

using nlohmann::json;

void RejectUnknownKeys(const json& obj, const std::set<std::string>& allowed,
                       const std::string& where) {
  if (!obj.is_object()) throw InvalidArgument(where + " must be a JSON object");
  for (const auto& item : obj.items()) {
    if (!allowed.count(item.key())) {
      throw InvalidArgument("unknown key '" + item.key() + "' in " + where);
    }
  }
}

template <typename T>
T Get(const json& obj, const char* key, const std::string& where) {
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw InvalidArgument("invalid value for '" + std::string(key) + "' in " +
                          where);
  }
}

std::size_t GetCount(const json& obj, const char* key, const std::string& where) {
  const json& v = obj.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw InvalidArgument("'" + std::string(key) + "' in " + where +
                          " must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

ObjectnessBand GetBand(const json& obj, const char* key) {
  const std::string where = std::string("objectness.") + key;
  const json& v = obj.at(key);
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    throw InvalidArgument(where + " must be a [lo, hi] pair");
  }
  return {v[0].get<double>(), v[1].get<double>()};
}

}  // namespace

SceneSpec SceneSpecFromJson(const json& j) {
  RejectUnknownKeys(j,
                    {"seed", "d", "n_total", "n_known", "n_unknown", "clusters",
                     "objectness", "prototype_jitter"},
                    "scene spec");
  std::size_t d = 2;
  if (j.contains("d")) d = GetCount(j, "d", "scene spec");
  if (d == 0) throw InvalidArgument("scene dimension must be >= 1");
  SceneSpec spec = SceneSpec::Default(d);
  if (j.contains("seed")) {
    const json& s = j.at("seed");
    if (!s.is_number_unsigned() && !(s.is_number_integer() && s.get<long long>() >= 0)) {
      throw InvalidArgument("'seed' must be a non-negative integer");
    }
    spec.seed = s.get<std::uint64_t>();
  }
  if (j.contains("n_total")) spec.n_total = GetCount(j, "n_total", "scene spec");
  if (j.contains("n_known")) spec.n_known = GetCount(j, "n_known", "scene spec");
  if (j.contains("n_unknown")) {
    spec.n_unknown = GetCount(j, "n_unknown", "scene spec");
  }
  if (j.contains("prototype_jitter")) {
    spec.prototype_jitter = Get<double>(j, "prototype_jitter", "scene spec");
  }
  if (j.contains("objectness")) {
    const json& o = j.at("objectness");
    RejectUnknownKeys(o, {"known", "unknown", "background"}, "objectness");
    if (o.contains("known")) spec.known_band = GetBand(o, "known");
    if (o.contains("unknown")) spec.unknown_band = GetBand(o, "unknown");
    if (o.contains("background")) spec.background_band = GetBand(o, "background");
  }
  if (j.contains("clusters")) {
    const json& cs = j.at("clusters");
    if (!cs.is_array()) throw InvalidArgument("'clusters' must be an array");
    spec.clusters.clear();
    int next_label = 1;
    for (std::size_t c = 0; c < cs.size(); ++c) {
      const std::string where = "clusters[" + std::to_string(c) + "]";
      const json& cj = cs[c];
      RejectUnknownKeys(cj, {"role", "label", "mean", "stddev", "count"}, where);
      ClusterSpec cl;
      cl.role = ParseSceneRole(Get<std::string>(cj, "role", where));
      cl.mean = Get<std::vector<double>>(cj, "mean", where);
      cl.stddev = Get<double>(cj, "stddev", where);
      if (cj.contains("count")) cl.count = GetCount(cj, "count", where);
      if (cl.role == SceneRole::kKnown) {
        cl.label = cj.contains("label") ? Get<int>(cj, "label", where) : next_label;
        next_label = cl.label + 1;
      } else {
        cl.label = 0;
      }
      spec.clusters.push_back(std::move(cl));
    }
  }
  spec.Validate();
  return spec;
}

json SceneSpecToJson(const SceneSpec& spec) {
  const std::vector<std::size_t> counts = spec.ResolvedCounts();
  json clusters = json::array();
  for (std::size_t c = 0; c < spec.clusters.size(); ++c) {
    const ClusterSpec& cl = spec.clusters[c];
    json cj = {{"role", SceneRoleName(cl.role)},
               {"mean", cl.mean},
               {"stddev", cl.stddev},
               {"count", counts[c]}};
    if (cl.role == SceneRole::kKnown) cj["label"] = cl.label;
    clusters.push_back(std::move(cj));
  }
  return {{"seed", spec.seed},
          {"d", spec.d},
          {"n_total", spec.n_total},
          {"n_known", spec.n_known},
          {"n_unknown", spec.n_unknown},
          {"clusters", std::move(clusters)},
          {"objectness",
           {{"known", {spec.known_band.lo, spec.known_band.hi}},
            {"unknown", {spec.unknown_band.lo, spec.unknown_band.hi}},
            {"background", {spec.background_band.lo, spec.background_band.hi}}}},
          {"prototype_jitter", spec.prototype_jitter}};
}

SeparationOptions SeparationOptionsFromJson(const json& j) {
  const std::string where = "separation options";
  RejectUnknownKeys(j,
                    {"seed", "n_cases", "d", "n_known", "n_unknown", "radius",
                     "stddev", "first_angle_deg", "last_angle_deg"},
                    where);
  SeparationOptions o;
  if (j.contains("seed")) o.seed = Get<std::uint64_t>(j, "seed", where);
  if (j.contains("n_cases")) o.n_cases = GetCount(j, "n_cases", where);
  if (j.contains("d")) o.d = GetCount(j, "d", where);
  if (j.contains("n_known")) o.n_known = GetCount(j, "n_known", where);
  if (j.contains("n_unknown")) o.n_unknown = GetCount(j, "n_unknown", where);
  if (j.contains("radius")) o.radius = Get<double>(j, "radius", where);
  if (j.contains("stddev")) o.stddev = Get<double>(j, "stddev", where);
  if (j.contains("first_angle_deg")) {
    o.first_angle_deg = Get<double>(j, "first_angle_deg", where);
  }
  if (j.contains("last_angle_deg")) {
    o.last_angle_deg = Get<double>(j, "last_angle_deg", where);
  }
  o.Validate();
  return o;
}

json SeparationOptionsToJson(const SeparationOptions& o) {
  return {{"seed", o.seed},           {"n_cases", o.n_cases},
          {"d", o.d},                 {"n_known", o.n_known},
          {"n_unknown", o.n_unknown}, {"radius", o.radius},
          {"stddev", o.stddev},       {"first_angle_deg", o.first_angle_deg},
          {"last_angle_deg", o.last_angle_deg}};
}

}  // namespace combsel
