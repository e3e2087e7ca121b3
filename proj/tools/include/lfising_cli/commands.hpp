// Copyright 2026 The lfising Authors
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

#ifndef LFISING_CLI_COMMANDS_HPP
#define LFISING_CLI_COMMANDS_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace lfising::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kInputError = 2 };

// Parses argv-style arguments (without the program name) and runs one subcommand.
// Tables go to `out` (or --out), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lfising::cli

#endif
