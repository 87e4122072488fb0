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
#include <cstdint>

#include "subseq/integer.hpp"
#include "subseq/word.hpp"

namespace subseq {

/// ABAB... with n letters.
BinaryWord z(std::size_t n);

/// P(z(n)) = F_{n+3} - 1.
Integer z_count(unsigned long n);

/// Smallest m with F_{m+3} - 1 >= n. No word shorter than m has n
/// subsequences, because z(m) maximizes the count among length-m words.
std::uint64_t min_length_lower_bound(const Integer& n);
std::uint64_t min_length_lower_bound(std::uint64_t n);

struct ExtensionReport {
  BinaryWord base;
  std::size_t n = 0;
  BinaryWord best_t;
  Integer best_count;
  bool unique = true;
  std::uint64_t maximizers = 0;
};

inline constexpr std::size_t kExtensionMaxLength = 20;

/// Exhaustively maximizes P(base∘t) over all 2^n words t. Ties report the
/// lexicographically smallest t. `base` must be empty or end with B; for an
/// A-ending base, call with star(base) and complement the answer.
ExtensionReport best_extension(const BinaryWord& base, std::size_t n);

inline constexpr std::size_t kMeanMaxLength = 20;

/// Exact average of P over all 2^n words of length n.
Rational mean_subseq_exact(std::size_t n);

/// 2 (3/2)^n - 1 as an exact rational.
Rational mean_closed_form(std::size_t n);

}  // namespace subseq
