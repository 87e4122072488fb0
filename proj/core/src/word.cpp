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

#include "subseq/word.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "subseq/errors.hpp"

namespace subseq {

BinaryWord BinaryWord::parse(std::string_view text) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (char c : text) {
    if (c == 'A') {
      letters.push_back(Letter::A);
    } else if (c == 'B') {
      letters.push_back(Letter::B);
    } else {
      throw InvalidArgument("malformed word '" + std::string(text) + "': letters must be A or B");
    }
  }
  return BinaryWord(std::move(letters));
}

BinaryWord BinaryWord::run(Letter l, std::size_t length) {
  return BinaryWord(std::vector<Letter>(length, l));
}

std::string BinaryWord::str() const {
  std::string out;
  out.reserve(letters_.size());
  for (Letter l : letters_) out.push_back(to_char(l));
  return out;
}

BinaryWord BinaryWord::star() const {
  std::vector<Letter> out(letters_.size());
  std::transform(letters_.begin(), letters_.end(), out.begin(), complement);
  return BinaryWord(std::move(out));
}

BinaryWord BinaryWord::reversed() const {
  return BinaryWord(std::vector<Letter>(letters_.rbegin(), letters_.rend()));
}

BinaryWord BinaryWord::repeat(std::size_t k) const {
  std::vector<Letter> out;
  out.reserve(letters_.size() * k);
  for (std::size_t i = 0; i < k; ++i) out.insert(out.end(), letters_.begin(), letters_.end());
  return BinaryWord(std::move(out));
}

BinaryWord operator+(const BinaryWord& s, const BinaryWord& t) {
  BinaryWord out = s;
  out += t;
  return out;
}

BinaryWord& BinaryWord::operator+=(const BinaryWord& t) {
  letters_.insert(letters_.end(), t.letters_.begin(), t.letters_.end());
  return *this;
}

BinaryWord word_from_bits(std::uint64_t bits, std::size_t length) {
  std::vector<Letter> letters(length);
  for (std::size_t i = 0; i < length; ++i) {
    letters[i] = ((bits >> (length - 1 - i)) & 1U) ? Letter::B : Letter::A;
  }
  return BinaryWord(std::move(letters));
}

bool SubseqProfile::valid() const {
  if (pA_start < 1 || pB_start < 1 || pA_end < 1 || pB_end < 1) return false;
  if (pA_start + pB_start != pA_end + pB_end) return false;
  Integer g;
  mpz_gcd(g.get_mpz_t(), pA_start.get_mpz_t(), pB_start.get_mpz_t());
  return g == 1;
}

SubseqProfile profile(const BinaryWord& s) {
  SubseqProfile p;
  // Appending a letter x: every subsequence (empty included) extended by x
  // is a subsequence ending in x; the ones already ending in x are among them.
  for (Letter l : s.letters()) {
    if (l == Letter::A) {
      p.pA_end += p.pB_end;
    } else {
      p.pB_end += p.pA_end;
    }
  }
  // Mirror recurrence for prepending, scanning right to left.
  for (auto it = s.letters().rbegin(); it != s.letters().rend(); ++it) {
    if (*it == Letter::A) {
      p.pA_start += p.pB_start;
    } else {
      p.pB_start += p.pA_start;
    }
  }
  SUBSEQ_CHECK_INVARIANT(p.pA_start + p.pB_start == p.pA_end + p.pB_end,
                         "start and end counts disagree for " + s.str());
  return p;
}

Integer count_subsequences(const BinaryWord& s) { return profile(s).total(); }

std::optional<std::uint64_t> count_subsequences_u64(std::span<const Letter> s) {
  std::uint64_t ea = 1;
  std::uint64_t eb = 1;
  for (Letter l : s) {
    std::uint64_t& dst = (l == Letter::A) ? ea : eb;
    const std::uint64_t src = (l == Letter::A) ? eb : ea;
    if (__builtin_add_overflow(dst, src, &dst)) return std::nullopt;
  }
  return ea + eb - 1;
}

namespace {

// Marks every realized subsequence code. A word w is encoded as the integer
// with a leading 1 followed by the bits of w (A=0, B=1), so codes for words
// of length <= n are distinct and below 2^(n+1).
void mark_subsets(std::span<const Letter> s, std::size_t pos, std::uint64_t code,
                  std::vector<std::uint64_t>& seen) {
  if (pos == s.size()) {
    seen[code >> 6] |= std::uint64_t{1} << (code & 63);
    return;
  }
  mark_subsets(s, pos + 1, code, seen);
  mark_subsets(s, pos + 1, (code << 1) | static_cast<std::uint64_t>(s[pos]), seen);
}

}  // namespace

std::uint64_t brute_force_count(const BinaryWord& s) {
  if (s.size() > kBruteForceMaxLength) {
    throw BudgetExceeded("brute_force_count: word length " + std::to_string(s.size()) +
                         " exceeds enumeration budget of " + std::to_string(kBruteForceMaxLength));
  }
  const std::size_t codes = std::size_t{1} << (s.size() + 1);
  std::vector<std::uint64_t> seen((codes + 63) / 64, 0);
  mark_subsets(s.letters(), 0, 1, seen);
  return std::accumulate(seen.begin(), seen.end(), std::uint64_t{0},
                         [](std::uint64_t acc, std::uint64_t w) { return acc + std::popcount(w); });
}

Integer concat_count(const SubseqProfile& ps, const SubseqProfile& pt) {
  return ps.pA_end * pt.pB_start + ps.pB_end * pt.pA_start - 1;
}

}  // namespace subseq
