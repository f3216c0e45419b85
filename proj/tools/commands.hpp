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

#ifndef COMBSEL_TOOLS_COMMANDS_HPP_
#define COMBSEL_TOOLS_COMMANDS_HPP_

#include <functional>
#include <memory>

#include "cli_support.hpp"

namespace cli {

struct Command {
  CLI::App* app = nullptr;
  std::function<int(const GlobalOptions&)> run;
};

Command AddGenerate(CLI::App& root);
Command AddSelect(CLI::App& root);
Command AddLoss(CLI::App& root);
Command AddGradcheck(CLI::App& root);
Command AddSweep(CLI::App& root);

}  // namespace cli

#endif  // COMBSEL_TOOLS_COMMANDS_HPP_
