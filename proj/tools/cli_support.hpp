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

// Shared plumbing for the combsel command-line tool: exit codes, handle
// ownership, layered configuration and deterministic text output.

#ifndef COMBSEL_TOOLS_CLI_SUPPORT_HPP_
#define COMBSEL_TOOLS_CLI_SUPPORT_HPP_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "combsel/combsel.h"
#include "json.hpp"

namespace cli {

using nlohmann::json;

enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitConfig = 2,
  kExitIo = 3,
  kExitStage = 4,
  kExitCheck = 5,
};

// Thrown by command code; main() prints the message and exits with `code`.
struct Failure {
  int code;
  std::string message;
};

[[noreturn]] void Fail(int code, const std::string& message);

// Converts a non-OK status into a Failure carrying the library message.
void Check(combsel_status status, const std::string& context = "");

struct EmbeddingsDeleter {
  void operator()(combsel_embeddings* p) const { combsel_embeddings_free(p); }
};
struct DiscoveryDeleter {
  void operator()(combsel_discovery* p) const { combsel_discovery_free(p); }
};
struct LossReportDeleter {
  void operator()(combsel_loss_report* p) const { combsel_loss_report_free(p); }
};
using Embeddings = std::unique_ptr<combsel_embeddings, EmbeddingsDeleter>;
using Discovery = std::unique_ptr<combsel_discovery, DiscoveryDeleter>;
using LossReport = std::unique_ptr<combsel_loss_report, LossReportDeleter>;

Embeddings LoadEmbeddings(const std::string& path);
std::string TakeString(char* str);

// Options shared by every subcommand.
struct GlobalOptions {
  std::optional<std::uint64_t> seed;
  std::string config_path;
  std::string out;
  bool quiet = false;
};

// Layered parameters: built-in defaults, then the --config file, then flags.
class Params {
 public:
  explicit Params(json defaults) : values_(std::move(defaults)) {}

  // Registers `--flag` on `app`, stored under `key` when given.
  template <typename T>
  void Flag(CLI::App* app, const std::string& flag, const std::string& key,
            const std::string& help) {
    auto holder = std::make_shared<std::optional<T>>();
    app->add_option(flag, *holder, help);
    overrides_.push_back([holder, key](json& j) {
      if (holder->has_value()) j[key] = **holder;
    });
  }
  void Switch(CLI::App* app, const std::string& flag, const std::string& key,
              bool value, const std::string& help);

  // Applies the config file (keys must be known) and then the flags.
  void Resolve(const std::string& config_path);

  const json& values() const { return values_; }
  json& values() { return values_; }

  double Double(const std::string& key) const;
  std::size_t Count(const std::string& key) const;
  std::string String(const std::string& key) const;
  bool Bool(const std::string& key) const;

 private:
  json values_;
  std::vector<std::function<void(json&)>> overrides_;
};

json ReadJsonFile(const std::string& path);

// Shortest round-trip decimal form.
std::string FormatDouble(double value);

// Writes `text` to `path`, or to stdout when path is empty.
void WriteText(const std::string& path, const std::string& text);

combsel_family ParseFamilyOrFail(const std::string& name);

}  // namespace cli

#endif  // COMBSEL_TOOLS_CLI_SUPPORT_HPP_
