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

#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"combsel: submodular selection, unknown discovery and "
               "combinatorial losses on embedding sets"};
  app.require_subcommand(1);
  app.fallthrough();

  cli::GlobalOptions global;
  app.add_option("--seed", global.seed, "Seed for every random draw");
  app.add_option("--config", global.config_path,
                 "JSON file of parameters; flags override its values");
  app.add_option("--out", global.out, "Primary output path (default stdout)");
  app.add_flag("--quiet", global.quiet, "Suppress summaries on stdout");
  app.set_version_flag("--version", combsel_version());

  const cli::Command commands[] = {
      cli::AddGenerate(app), cli::AddSelect(app), cli::AddLoss(app),
      cli::AddGradcheck(app), cli::AddSweep(app)};

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kExitConfig;
  }

  try {
    for (const cli::Command& command : commands) {
      if (command.app->parsed()) return command.run(global);
    }
  } catch (const cli::Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitInternal;
  }
  return cli::kExitInternal;
}
