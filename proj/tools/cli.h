// Copyright 2026 The Authors.
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

#ifndef ROBUSTKIT_TOOLS_CLI_H_
#define ROBUSTKIT_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace robustkit::cli {

// Process exit codes.
inline constexpr int kExitSuccess = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsageError = 2;
inline constexpr int kExitBudgetRefusal = 3;

// Runs the robustkit command line. `args` excludes the program name.
// Results go to `out` as key=value lines; diagnostics go to `err`.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace robustkit::cli

#endif  // ROBUSTKIT_TOOLS_CLI_H_
