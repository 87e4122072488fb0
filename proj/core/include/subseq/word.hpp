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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "subseq/integer.hpp"

namespace subseq {

enum class Letter : std::uint8_t { A = 0, B = 1 };

constexpr Letter complement(Letter l) noexcept { return l == Letter::A ? Letter::B : Letter::A; }
constexpr char to_char(Letter l) noexcept { return l == Letter::A ? 'A' : 'B'; }

/// A finite word over {A, B}. Ordering is lexicographic with A < B.
class BinaryWord {
 public:
  BinaryWord() = default;
  explicit BinaryWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  /// Parses a string over {A, B}; any other character is rejected.
  static BinaryWord parse(std::string_view text);
  /// `length` letters of `l`.
  static BinaryWord run(Letter l, std::size_t length);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter back() const { return letters_.back(); }
  std::span<const Letter> letters() const noexcept { return letters_; }

  std::string str() const;

  BinaryWord star() const;
  BinaryWord reversed() const;
  BinaryWord repeat(std::size_t k) const;

  friend BinaryWord operator+(const BinaryWord& s, const BinaryWord& t);
  BinaryWord& operator+=(const BinaryWord& t);
  BinaryWord& push_back(Letter l) {
    letters_.push_back(l);
    return *this;
  }

  friend bool operator==(const BinaryWord&, const BinaryWord&) = default;
  friend std::strong_ordering operator<=>(const BinaryWord&, const BinaryWord&) = default;

 private:
  std::vector<Letter> letters_;
};

inline BinaryWord concat(const BinaryWord& s, const BinaryWord& t) { return s + t; }
inline BinaryWord star(const BinaryWord& s) { return s.star(); }

/// The word of length `length` whose letters are the bits of `bits`,
/// most significant first (0 = A, 1 = B). Used for enumeration in
/// lexicographic order.
BinaryWord word_from_bits(std::uint64_t bits, std::size_t length);

/// Distinct-subsequence counts of a word. Every directional count includes
/// the empty subsequence.
struct SubseqProfile {
  Integer pA_start = 1;
  Integer pB_start = 1;
  Integer pA_end = 1;
  Integer pB_end = 1;

  Integer total() const { return pA_start + pB_start - 1; }
  bool valid() const;

  friend bool operator==(const SubseqProfile&, const SubseqProfile&) = default;
};

SubseqProfile profile(const BinaryWord& s);

/// P(s): distinct subsequences of `s`, the empty one included.
Integer count_subsequences(const BinaryWord& s);

/// Same count in machine integers; nullopt on overflow.
std::optional<std::uint64_t> count_subsequences_u64(std::span<const Letter> s);

inline constexpr std::size_t kBruteForceMaxLength = 22;

/// Reference count by enumerating all 2^|s| position subsets and
/// deduplicating the realized words. Throws BudgetExceeded above
/// kBruteForceMaxLength letters.
std::uint64_t brute_force_count(const BinaryWord& s);

/// P(s∘t) from the end-counts of s and start-counts of t.
Integer concat_count(const SubseqProfile& ps, const SubseqProfile& pt);

}  // namespace subseq
