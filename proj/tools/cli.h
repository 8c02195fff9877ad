// Copyright 2026 The nocomments Authors
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

#ifndef NOCOMMENTS_TOOLS_CLI_H_
#define NOCOMMENTS_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace nocomments::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFatal = 1;
inline constexpr int kExitUsage = 2;

// Runs one subcommand. 'args' excludes the program name. Returns 0 on success
// (including runs whose error report has rows), 1 on a fatal configuration
// or I/O error, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace nocomments::cli

#endif  // NOCOMMENTS_TOOLS_CLI_H_
