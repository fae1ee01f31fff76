// Copyright 2026 The domkit Authors
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


#ifndef DOMKIT_CLI_CLI_HPP_
#define DOMKIT_CLI_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace domkit::cli {

enum ExitCode : int {
  kOk = 0,
  kLawFailed = 1,
  kUsage = 2,
  kBudgetExhausted = 3,
};

// Runs the tool on `args` (without the program name) and returns the exit
// status. Nothing is written to std::cout or std::cerr directly.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace domkit::cli

#endif  // DOMKIT_CLI_CLI_HPP_
