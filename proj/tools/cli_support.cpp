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

#include "cli_support.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace cli {

void Fail(int code, const std::string& message) {
  throw Failure{code, message};
}

void Check(combsel_status status, const std::string& context) {
  if (status == COMBSEL_OK) return;
  std::string message = combsel_last_error();
  if (!context.empty()) message = context + ": " + message;
  switch (status) {
    case COMBSEL_ERR_INVALID_ARGUMENT:
      Fail(kExitConfig, message);
    case COMBSEL_ERR_IO:
      Fail(kExitIo, message);
    case COMBSEL_ERR_NUMERIC:
    case COMBSEL_ERR_STAGE:
      Fail(kExitStage, message);
    default:
      Fail(kExitInternal, message);
  }
}

Embeddings LoadEmbeddings(const std::string& path) {
  combsel_embeddings* raw = nullptr;
  const combsel_status status = combsel_embeddings_load_csv(path.c_str(), &raw);
  // A malformed file is an input problem, reported like a missing one.
  if (status == COMBSEL_ERR_INVALID_ARGUMENT) {
    Fail(kExitIo, path + ": " + combsel_last_error());
  }
  Check(status, path);
  return Embeddings(raw);
}

std::string TakeString(char* str) {
  std::string out = str != nullptr ? str : "";
  combsel_string_free(str);
  return out;
}

void Params::Switch(CLI::App* app, const std::string& flag,
                    const std::string& key, bool value,
                    const std::string& help) {
  auto holder = std::make_shared<bool>(false);
  app->add_flag(flag, *holder, help);
  overrides_.push_back([holder, key, value](json& j) {
    if (*holder) j[key] = value;
  });
}

void Params::Resolve(const std::string& config_path) {
  if (!config_path.empty()) {
    const json file = ReadJsonFile(config_path);
    if (!file.is_object()) Fail(kExitConfig, config_path + ": expected a JSON object");
    for (const auto& item : file.items()) {
      if (!values_.contains(item.key())) {
        Fail(kExitConfig, config_path + ": unknown key '" + item.key() + "'");
      }
      values_[item.key()] = item.value();
    }
  }
  for (const auto& apply : overrides_) apply(values_);
}

double Params::Double(const std::string& key) const {
  const json& v = values_.at(key);
  if (!v.is_number()) Fail(kExitConfig, "'" + key + "' must be a number");
  return v.get<double>();
}

std::size_t Params::Count(const std::string& key) const {
  const json& v = values_.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    Fail(kExitConfig, "'" + key + "' must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

std::string Params::String(const std::string& key) const {
  const json& v = values_.at(key);
  if (!v.is_string()) Fail(kExitConfig, "'" + key + "' must be a string");
  return v.get<std::string>();
}

bool Params::Bool(const std::string& key) const {
  const json& v = values_.at(key);
  if (!v.is_boolean()) Fail(kExitConfig, "'" + key + "' must be a boolean");
  return v.get<bool>();
}

json ReadJsonFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail(kExitIo, "cannot open " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    Fail(kExitConfig, path + ": " + e.what());
  }
}

std::string FormatDouble(double value) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, result.ptr);
}

void WriteText(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) Fail(kExitIo, "cannot write " + path);
  out << text;
  out.flush();
  if (!out) Fail(kExitIo, "write failed: " + path);
}

combsel_family ParseFamilyOrFail(const std::string& name) {
  combsel_family family;
  if (combsel_parse_family(name.c_str(), &family) != COMBSEL_OK) {
    Fail(kExitConfig, combsel_last_error());
  }
  return family;
}

}  // namespace cli
