// Copyright 2026 The bpmax Authors.
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

#ifndef BPMAX_TOOLS_COMMANDS_H_
#define BPMAX_TOOLS_COMMANDS_H_

#include <ostream>
#include <string>
#include <vector>

namespace bpmax::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitScaleRefusal = 3;

// Entry point of the bpmax tool. `args` excludes the program name. JSON goes
// to `out`, diagnostics to `err`; returns the process exit code.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace bpmax::cli

#endif  // BPMAX_TOOLS_COMMANDS_H_
