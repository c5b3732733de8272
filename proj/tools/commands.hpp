// Copyright 2026 The coevent Authors
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

// The `coevent` command-line front end. Kept in a library so tests can drive
// it in-process and capture both streams.

#ifndef COEVENT_TOOLS_COMMANDS_HPP_
#define COEVENT_TOOLS_COMMANDS_HPP_

#include <ostream>

namespace coevent::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitInternal = 3;
inline constexpr int kExitInfeasible = 4;
inline constexpr int kExitUnbounded = 5;

// Parses argv (argv[0] is the program name), runs one command, and returns
// the process exit code. Reports go to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace coevent::cli

#endif  // COEVENT_TOOLS_COMMANDS_HPP_
