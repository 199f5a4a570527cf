// Copyright 2026 The oddcycle Authors
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

#ifndef ODDCYCLE_CLI_HPP_
#define ODDCYCLE_CLI_HPP_

#include <iosfwd>

namespace oddcycle::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRefused = 1;
inline constexpr int kExitUsage = 2;

inline constexpr const char* kOutDirEnv = "ODDCYCLE_OUT_DIR";

// Runs one subcommand. Reports go to files under the output directory and to
// `out`; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv);

}  // namespace oddcycle::cli

#endif  // ODDCYCLE_CLI_HPP_
