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

#include "subseq/integer.hpp"
#include "subseq/word.hpp"

namespace subseq {

/// (a, b) with a, b >= 1 and gcd(a, b) = 1. The constructor enforces it.
class CoprimePair {
 public:
  CoprimePair(Integer a, Integer b);

  const Integer& a() const noexcept { return a_; }
  const Integer& b() const noexcept { return b_; }
  Integer sum() const { return a_ + b_; }

  friend bool operator==(const CoprimePair&, const CoprimePair&) = default;

 private:
  Integer a_;
  Integer b_;
};

/// Partial quotients [c0; c1, ..., ck] of a positive rational.
struct ContinuedFraction {
  std::vector<Integer> quotients;

  /// c0 >= 0, c_i >= 1 afterwards, last >= 2 when k >= 1, value > 0.
  bool canonical() const;
  /// Folds a trailing 1 into its predecessor. Throws InvalidArgument when
  /// the quotients do not describe a positive rational.
  ContinuedFraction canonicalized() const;
  Rational value() const;
  Integer quotient_sum() const;

  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;
};

/// A word as its first letter plus the lengths of its alternating runs.
/// Runs are arbitrary precision so gen() can describe words far too long
/// to materialize.
struct RunLengthWord {
  std::optional<Letter> first;
  std::vector<Integer> runs;

  static RunLengthWord from_word(const BinaryWord& w);

  Integer length() const;
  /// Throws BudgetExceeded if the word has more than `max_letters` letters.
  BinaryWord expand(std::size_t max_letters = std::size_t{1} << 30) const;

  friend bool operator==(const RunLengthWord&, const RunLengthWord&) = default;
};

/// The word traced by the subtractive Euclidean algorithm on (a, b):
/// A while a > b, B while b > a, stopping at (1, 1). Whole runs are emitted
/// per division step, so the cost is O(log(a + b)) big-integer operations.
RunLengthWord gen(const CoprimePair& p);
/// Validating convenience overload; throws InvalidArgument for non-coprime input.
RunLengthWord gen(const Integer& a, const Integer& b);
BinaryWord gen_word(const Integer& a, const Integer& b);

/// Inverse of gen: (P^A(s), P^B(s)).
CoprimePair word_to_pair(const BinaryWord& s);
/// Same pair computed from the run lengths without expanding the word.
CoprimePair word_to_pair(const RunLengthWord& s);

ContinuedFraction cf_of_rational(const Integer& num, const Integer& den);

/// [r0; r1, ..., r_m + 1] where r0 is the leading A-run (0 if the word
/// starts with B). The empty word maps to [1].
ContinuedFraction word_to_cf(const BinaryWord& s);
ContinuedFraction word_to_cf(const RunLengthWord& s);
/// Inverse of word_to_cf. Non-canonical input is canonicalized first.
RunLengthWord cf_to_runs(const ContinuedFraction& cf);
BinaryWord cf_to_word(const ContinuedFraction& cf);

/// S_N(a): sum of the partial quotients of a/N, for 1 <= a < N coprime.
/// Checked against |gen(a, N - a)| + 2.
Integer partial_quotient_sum(const Integer& a, const Integer& n);

/// Euler's totient by trial division.
std::uint64_t euler_phi(std::uint64_t n);

/// F_m with F_1 = F_2 = 1.
Integer fibonacci(unsigned long m);

}  // namespace subseq
