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
#include <optional>
#include <vector>

#include "subseq/euclid_cf.hpp"
#include "subseq/word.hpp"

namespace subseq {

struct ShortestWordResult {
  std::uint64_t n = 0;
  std::uint64_t best_a = 0;
  RunLengthWord word;
  std::uint64_t word_length = 0;
  std::uint64_t lower_bound = 0;
  std::uint64_t candidates_scanned = 0;
};

/// Exact minimum-length word with exactly n distinct subsequences.
///
/// Every such word is gen(a, n + 1 - a) for a unit a mod n + 1, and its
/// length is S_{n+1}(a) - 2, so the search runs over numerators only and
/// never builds candidate words. gen(N - a, a) is the complement of
/// gen(a, N - a), so only a <= N / 2 is scanned; the smallest optimal a
/// always lies there. Candidates are abandoned as soon as the letters
/// emitted so far plus the Fibonacci lower bound for the remaining pair
/// exceed the best length found. Ties go to the smallest a.
ShortestWordResult shortest_word(std::uint64_t n);

inline constexpr std::uint64_t kBruteForceShortestMaxN = 10'000;

/// First word in (length, lexicographic) order with exactly n subsequences,
/// found by plain enumeration. Throws BudgetExceeded for n above
/// kBruteForceShortestMaxN.
BinaryWord brute_force_shortest(std::uint64_t n);

/// Number of binary words with exactly N subsequences: phi(N + 1).
std::uint64_t count_words(std::uint64_t n);

struct ZarembaResult {
  std::uint64_t modulus = 0;
  std::uint64_t bound = 0;
  std::optional<std::uint64_t> witness;
  std::optional<ContinuedFraction> cf;

  friend bool operator==(const ZarembaResult&, const ZarembaResult&) = default;
};

/// Smallest a in [1, N - 1] coprime to N whose continued fraction a/N has
/// every partial quotient <= bound.
ZarembaResult zaremba_witness(std::uint64_t modulus, std::uint64_t bound);

inline constexpr std::uint64_t kScanMaxModulus = 10'000'000;

/// zaremba_witness for every N in [lo, hi], in ascending N regardless of `jobs`.
std::vector<ZarembaResult> zaremba_scan(std::uint64_t lo, std::uint64_t hi, std::uint64_t bound,
                                        unsigned jobs = 1);

struct SNStats {
  std::uint64_t modulus = 0;
  std::uint64_t sample_size = 0;
  std::uint64_t min_s = 0;
  std::uint64_t median_s = 0;
  double mean_s = 0.0;
  std::uint64_t sum_s = 0;
  std::uint64_t argmin_a = 0;
  /// (12 / pi^2) ln N ln ln N; diagnostic only.
  double reference = 0.0;
};

inline constexpr std::uint64_t kStatsMaxSample = 10'000'000;

/// Distribution of S_N(a) over the units a mod N. Median is the lower
/// middle element. Requires N >= 3 and phi(N) <= kStatsMaxSample.
SNStats s_stats(std::uint64_t modulus);

/// Sum of partial quotients of a/N in machine integers, or nullopt when
/// gcd(a, N) != 1.
std::optional<std::uint64_t> quotient_sum_u64(std::uint64_t a, std::uint64_t modulus);

}  // namespace subseq
