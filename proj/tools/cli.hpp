/*
   Copyright 2026 The subseq Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace subseq::cli {

enum ExitCode : int {
  kOk = 0,
  kUsageError = 2,
  kBudgetError = 3,
  kInternalError = 4,
};

/// Words longer than this print in run-length form unless --expand is given.
inline constexpr std::size_t kExpandThreshold = 1'000'000;

/// Runs the command line `args` (without the program name). The payload goes
/// to `out` (or to the --output file) only when the command succeeds;
/// diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace subseq::cli
