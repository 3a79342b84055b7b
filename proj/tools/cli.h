// Copyright 2026 The cliffgate Authors
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

#ifndef CLIFFGATE_TOOLS_CLI_H
#define CLIFFGATE_TOOLS_CLI_H

#include <ostream>
#include <string>
#include <vector>

namespace cliffgate::cli {

enum ExitCode : int {
    OK = 0,
    INTERNAL_ERROR = 1,
    USAGE_ERROR = 2,
    PRECONDITION_FAILED = 3,
    VERIFICATION_FAILED = 4,
    CAP_EXCEEDED = 5,
};

/// Runs the command line `args` (without the program name), writing results to `out`
/// and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace cliffgate::cli

#endif
