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

#ifndef COMBSEL_SYNTH_SCENE_JSON_HPP_
#define COMBSEL_SYNTH_SCENE_JSON_HPP_

#include "json.hpp"
#include "synth/scene.hpp"

namespace combsel {

// Missing keys keep SceneSpec::Default values; if "clusters" is absent the
// default geometry is used at the requested dimension. Unknown keys are
// rejected so that typos surface as config errors.
SceneSpec SceneSpecFromJson(const nlohmann::json& json);

// Fully resolved form: every cluster carries its final count.
nlohmann::json SceneSpecToJson(const SceneSpec& spec);

SeparationOptions SeparationOptionsFromJson(const nlohmann::json& json);
nlohmann::json SeparationOptionsToJson(const SeparationOptions& options);

}  // namespace combsel

#endif  // COMBSEL_SYNTH_SCENE_JSON_HPP_
