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

#include "subseq/search.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "subseq/errors.hpp"
#include "subseq/extremal.hpp"
#include "subseq/parallel.hpp"

namespace subseq {

namespace {

constexpr std::uint64_t kNoBound = std::numeric_limits<std::uint64_t>::max();

constexpr std::array<std::uint64_t, 94> kFib = [] {
  std::array<std::uint64_t, 94> f{};
  f[1] = 1;
  for (std::size_t i = 2; i < f.size(); ++i) f[i] = f[i - 1] + f[i - 2];
  return f;
}();

// Minimum length of any word whose coprime pair sums to `pair_sum`:
// smallest m with F_{m+3} >= pair_sum.
std::uint64_t remaining_lower_bound(std::uint64_t pair_sum) {
  auto it = std::lower_bound(kFib.begin() + 3, kFib.end(), pair_sum);
  return static_cast<std::uint64_t>(it - kFib.begin()) - 3;
}

// |gen(x, y)| by whole-run division steps, or nullopt if gcd(x, y) != 1 or
// the length provably exceeds `cap` (emitted letters plus the lower bound
// for the rest).
std::optional<std::uint64_t> gen_length_bounded(std::uint64_t x, std::uint64_t y, std::uint64_t cap) {
  std::uint64_t length = 0;
  while (true) {
    if (x == 1 && y == 1) return length;
    if (x == 0 || y == 0) return std::nullopt;
    if (x > y) {
      if (y == 1) {
        length += x - 1;
        return length <= cap ? std::optional(length) : std::nullopt;
      }
      length += x / y;
      x %= y;
    } else {
      if (x == 1) {
        length += y - 1;
        return length <= cap ? std::optional(length) : std::nullopt;
      }
      length += y / x;
      y %= x;
    }
    if (cap != kNoBound && length + remaining_lower_bound(x + y) > cap) return std::nullopt;
  }
}

}  // namespace

std::optional<std::uint64_t> quotient_sum_u64(std::uint64_t a, std::uint64_t modulus) {
  if (a == 0 || modulus == 0) throw InvalidArgument("quotient_sum_u64: arguments must be >= 1");
  std::uint64_t p = a;
  std::uint64_t q = modulus;
  std::uint64_t sum = 0;
  // a/N = [0; ...] when a < N; the leading zero contributes nothing.
  while (q != 0) {
    sum += p / q;
    const std::uint64_t r = p % q;
    p = q;
    q = r;
  }
  if (p != 1) return std::nullopt;
  return sum;
}

ShortestWordResult shortest_word(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("shortest_word: n must be >= 1");
  if (n > std::numeric_limits<std::uint64_t>::max() / 2) {
    throw InvalidArgument("shortest_word: n too large");
  }
  const std::uint64_t modulus = n + 1;
  const std::uint64_t half = modulus / 2;

  ShortestWordResult result;
  result.n = n;
  result.lower_bound = min_length_lower_bound(n);

  std::uint64_t best_len = kNoBound;
  std::uint64_t best_a = 0;

  // Seed the bound near the golden ratio, where long alternating prefixes live.
  const double golden_tail = 1.0 - 1.0 / std::numbers::phi;
  const auto centre = static_cast<std::uint64_t>(std::llround(golden_tail * static_cast<double>(modulus)));
  for (std::uint64_t d = 0; d <= 32; ++d) {
    for (std::uint64_t a : {centre - d, centre + d}) {
      if (a < 1 || a > half) continue;
      auto len = gen_length_bounded(a, modulus - a, best_len);
      if (len && (*len < best_len || (*len == best_len && a < best_a))) {
        best_len = *len;
        best_a = a;
      }
    }
  }

  for (std::uint64_t a = 1; a <= half; ++a) {
    ++result.candidates_scanned;
    auto len = gen_length_bounded(a, modulus - a, best_len);
    if (!len) continue;
    if (*len < best_len || (*len == best_len && a < best_a)) {
      best_len = *len;
      best_a = a;
    }
  }
  SUBSEQ_CHECK_INVARIANT(best_a != 0, "shortest_word found no candidate");

  result.best_a = best_a;
  result.word_length = best_len;
  result.word = gen(from_u64(best_a), from_u64(modulus - best_a));
  SUBSEQ_CHECK_INVARIANT(result.word.length() == from_u64(best_len), "shortest_word length mismatch");
  SUBSEQ_CHECK_INVARIANT(word_to_pair(result.word).sum() == from_u64(modulus),
                         "shortest_word count mismatch");
  SUBSEQ_CHECK_INVARIANT(best_len >= result.lower_bound, "shortest_word beats the Fibonacci bound");
  return result;
}

BinaryWord brute_force_shortest(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("brute_force_shortest: n must be >= 1");
  if (n > kBruteForceShortestMaxN) {
    throw BudgetExceeded("brute_force_shortest: n=" + std::to_string(n) + " exceeds budget of " +
                         std::to_string(kBruteForceShortestMaxN));
  }
  // A^(n-1) always works, so the loop terminates; lengths stay far below 64.
  for (std::size_t length = 0;; ++length) {
    if (length >= 40) throw BudgetExceeded("brute_force_shortest: word length budget exhausted");
    const std::uint64_t total = std::uint64_t{1} << length;
    for (std::uint64_t bits = 0; bits < total; ++bits) {
      BinaryWord w = word_from_bits(bits, length);
      auto count = count_subsequences_u64(w.letters());
      if (count && *count == n) return w;
    }
  }
}

std::uint64_t count_words(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("count_words: N must be >= 1");
  return euler_phi(n + 1);
}

ZarembaResult zaremba_witness(std::uint64_t modulus, std::uint64_t bound) {
  if (modulus < 2) throw InvalidArgument("zaremba_witness: N must be >= 2");
  if (bound < 1) throw InvalidArgument("zaremba_witness: bound must be >= 1");
  ZarembaResult result{modulus, bound, std::nullopt, std::nullopt};
  std::vector<std::uint64_t> quotients;
  for (std::uint64_t a = 1; a < modulus; ++a) {
    quotients.assign(1, 0);
    std::uint64_t p = modulus;
    std::uint64_t q = a;
    bool ok = true;
    while (q != 0) {
      const std::uint64_t c = p / q;
      if (c > bound) {
        ok = false;
        break;
      }
      quotients.push_back(c);
      const std::uint64_t r = p % q;
      p = q;
      q = r;
    }
    if (!ok || p != 1) continue;
    result.witness = a;
    ContinuedFraction cf;
    for (std::uint64_t c : quotients) cf.quotients.push_back(from_u64(c));
    SUBSEQ_CHECK_INVARIANT(cf.value() == Rational(from_u64(a), from_u64(modulus)),
                           "zaremba witness continued fraction does not reconstruct a/N");
    result.cf = std::move(cf);
    break;
  }
  return result;
}

std::vector<ZarembaResult> zaremba_scan(std::uint64_t lo, std::uint64_t hi, std::uint64_t bound, unsigned jobs) {
  if (lo < 2) throw InvalidArgument("zaremba_scan: range must start at N >= 2");
  if (hi < lo) return {};
  if (hi > kScanMaxModulus) {
    throw BudgetExceeded("zaremba_scan: upper end " + std::to_string(hi) + " exceeds budget of " +
                         std::to_string(kScanMaxModulus));
  }
  return parallel_map(hi - lo + 1, jobs, [&](std::size_t i) { return zaremba_witness(lo + i, bound); });
}

SNStats s_stats(std::uint64_t modulus) {
  if (modulus < 3) throw InvalidArgument("s_stats: N must be >= 3");
  const std::uint64_t units = euler_phi(modulus);
  if (units > kStatsMaxSample) {
    throw BudgetExceeded("s_stats: phi(N)=" + std::to_string(units) + " exceeds sample budget of " +
                         std::to_string(kStatsMaxSample));
  }
  std::vector<std::uint64_t> sample;
  sample.reserve(units);
  SNStats stats;
  stats.modulus = modulus;
  stats.min_s = kNoBound;
  for (std::uint64_t a = 1; a < modulus; ++a) {
    auto s = quotient_sum_u64(a, modulus);
    if (!s) continue;
    sample.push_back(*s);
    stats.sum_s += *s;
    if (*s < stats.min_s) {
      stats.min_s = *s;
      stats.argmin_a = a;
    }
  }
  SUBSEQ_CHECK_INVARIANT(sample.size() == units, "s_stats sample size differs from phi(N)");
  stats.sample_size = units;
  const auto mid = sample.begin() + static_cast<std::ptrdiff_t>((sample.size() - 1) / 2);
  std::nth_element(sample.begin(), mid, sample.end());
  stats.median_s = *mid;
  stats.mean_s = static_cast<double>(stats.sum_s) / static_cast<double>(units);
  const double ln_n = std::log(static_cast<double>(modulus));
  stats.reference = 12.0 / (std::numbers::pi * std::numbers::pi) * ln_n * std::log(ln_n);
  return stats;
}

}  // namespace subseq
