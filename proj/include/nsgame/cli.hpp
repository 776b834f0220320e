// Copyright 2026 The nsgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end.
//
//   nsgame eval         --logic L --formula F (--val p=T,... | --val-file PATH)
//   nsgame solve        ... same inputs
//   nsgame trace        ... same inputs
//   nsgame iesds        ... same inputs [--cap N]
//   nsgame verify       --logic L [--atoms 3] [--depth 4] [--max-formulas 50000]
//                       [--budget 64]
//   nsgame derive-table --logic L
//
// Every subcommand accepts --format text|structured (json is an alias of
// structured).

#ifndef NSGAME_CLI_HPP_
#define NSGAME_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace nsgame {

enum ExitCode : int {
  kExitOk = 0,
  kExitCounterexample = 1,
  kExitParseError = 2,
  kExitValuationError = 3,
  kExitBudgetExceeded = 4,
  kExitUsage = 5,
};

// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nsgame

#endif  // NSGAME_CLI_HPP_
