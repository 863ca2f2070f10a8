// Copyright 2026 The Dueling Algorithms Authors
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


#ifndef DUELING_TOOLS_CLI_H_
#define DUELING_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace dueling {
namespace cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitSolverFailure = 3;
inline constexpr int kExitVerificationFailure = 4;

// Environment variable naming the default output directory.
inline constexpr char kOutputDirEnv[] = "DUEL_OUTPUT_DIR";

// Runs one command. Reports go to --out, else into $DUEL_OUTPUT_DIR, else to
// `out`; diagnostics go to `err`. Returns the process exit code.
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string CodeVersion();

}  // namespace cli
}  // namespace dueling

#endif  // DUELING_TOOLS_CLI_H_
