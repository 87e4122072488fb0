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

#include <stdexcept>
#include <string>

namespace subseq {

/// Malformed input: bad letters, non-coprime pairs, out-of-range arguments.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration or scan would exceed its hard size cap.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal identity that must always hold did not.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {
[[noreturn]] inline void invariant_failed(const std::string& what) {
  throw InvariantViolation("invariant violated: " + what);
}
}  // namespace detail

#define SUBSEQ_CHECK_INVARIANT(cond, msg)                 \
  do {                                                    \
    if (!(cond)) ::subseq::detail::invariant_failed(msg); \
  } while (0)

}  // namespace subseq
