// Copyright 2026 The addpoly Authors.
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

#ifndef ADDPOLY_TOOLS_CLI_HPP_
#define ADDPOLY_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace addpoly::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitPrecision = 3;

// Runs one command. args excludes the program name. JSON goes to out,
// diagnostics to err; a polynomial argument of "-" is read from in.
int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                std::ostream& err);

}  // namespace addpoly::cli

#endif  // ADDPOLY_TOOLS_CLI_HPP_
