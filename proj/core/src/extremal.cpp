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

#include "subseq/extremal.hpp"

#include <array>
#include <vector>

#include "subseq/errors.hpp"
#include "subseq/euclid_cf.hpp"

namespace subseq {

namespace {

// F_0 .. F_93; F_93 is the largest Fibonacci number below 2^64.
constexpr std::array<std::uint64_t, 94> kFib = [] {
  std::array<std::uint64_t, 94> f{};
  f[1] = 1;
  for (std::size_t i = 2; i < f.size(); ++i) f[i] = f[i - 1] + f[i - 2];
  return f;
}();

}  // namespace

BinaryWord z(std::size_t n) {
  std::vector<Letter> letters(n);
  for (std::size_t i = 0; i < n; ++i) letters[i] = (i % 2 == 0) ? Letter::A : Letter::B;
  return BinaryWord(std::move(letters));
}

Integer z_count(unsigned long n) { return fibonacci(n + 3) - 1; }

std::uint64_t min_length_lower_bound(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("min_length_lower_bound: n must be >= 1");
  // F_{m+3} - 1 >= n  <=>  F_{m+3} > n.
  for (std::size_t i = 3; i < kFib.size(); ++i) {
    if (kFib[i] > n) return i - 3;
  }
  return min_length_lower_bound(from_u64(n));
}

std::uint64_t min_length_lower_bound(const Integer& n) {
  if (n < 1) throw InvalidArgument("min_length_lower_bound: n must be >= 1");
  std::uint64_t m = 0;
  while (z_count(m) < n) ++m;
  return m;
}

ExtensionReport best_extension(const BinaryWord& base, std::size_t n) {
  if (!base.empty() && base.back() == Letter::A) {
    throw InvalidArgument("best_extension: base '" + base.str() +
                          "' ends with A; extend star(base) instead and complement the result");
  }
  if (n > kExtensionMaxLength) {
    throw BudgetExceeded("best_extension: extension length " + std::to_string(n) + " exceeds budget of " +
                         std::to_string(kExtensionMaxLength));
  }
  ExtensionReport report;
  report.base = base;
  report.n = n;
  report.maximizers = 0;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    BinaryWord t = word_from_bits(bits, n);
    Integer count = count_subsequences(base + t);
    if (report.maximizers == 0 || count > report.best_count) {
      report.best_count = std::move(count);
      report.best_t = std::move(t);
      report.maximizers = 1;
    } else if (count == report.best_count) {
      ++report.maximizers;
    }
  }
  report.unique = report.maximizers == 1;
  return report;
}

Rational mean_subseq_exact(std::size_t n) {
  if (n > kMeanMaxLength) {
    throw BudgetExceeded("mean_subseq_exact: length " + std::to_string(n) + " exceeds budget of " +
                         std::to_string(kMeanMaxLength));
  }
  const std::uint64_t total = std::uint64_t{1} << n;
  Integer sum = 0;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    sum += count_subsequences(word_from_bits(bits, n));
  }
  Rational mean(sum, from_u64(total));
  mean.canonicalize();
  return mean;
}

Rational mean_closed_form(std::size_t n) {
  Integer three_pow;
  Integer two_pow;
  mpz_ui_pow_ui(three_pow.get_mpz_t(), 3, n);
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, n);
  Rational out(2 * three_pow, two_pow);
  out.canonicalize();
  return out - 1;
}

}  // namespace subseq
