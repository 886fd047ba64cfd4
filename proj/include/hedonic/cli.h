// Copyright 2026 The Hedonic Authors
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

#ifndef HEDONIC_CLI_H_
#define HEDONIC_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace hedonic {

// Process exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUnstable = 1;
inline constexpr int kExitInputError = 2;

// Runs the `hedonic` command line (args excludes the program name) and
// returns its exit code. Verbs: eval, check, core, hunt, serve.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace hedonic

#endif  // HEDONIC_CLI_H_
