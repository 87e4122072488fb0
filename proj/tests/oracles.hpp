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

// Slow, independent reference implementations used only by tests. Nothing
// here calls into the library's counting or Euclid code.

#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace subseq::oracle {

/// gen(a, b) by the literal one-letter-per-step recursion.
inline std::string gen_slow(std::uint64_t a, std::uint64_t b) {
  std::string out;
  while (a != 1 || b != 1) {
    if (a > b) {
      out.push_back('A');
      a -= b;
    } else {
      out.push_back('B');
      b -= a;
    }
  }
  return out;
}

/// All distinct subsequences of `w` as strings, via every subset of positions.
inline std::set<std::string> all_subsequences(const std::string& w) {
  std::set<std::string> out;
  const std::uint64_t total = std::uint64_t{1} << w.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if ((mask >> i) & 1U) s.push_back(w[i]);
    }
    out.insert(std::move(s));
  }
  return out;
}

struct Directional {
  std::uint64_t total, a_start, b_start, a_end, b_end;
};

/// Directional counts (empty subsequence included in each) by enumeration.
inline Directional directional_counts(const std::string& w) {
  Directional d{0, 1, 1, 1, 1};
  for (const auto& s : all_subsequences(w)) {
    ++d.total;
    if (s.empty()) continue;
    (s.front() == 'A' ? d.a_start : d.b_start)++;
    (s.back() == 'A' ? d.a_end : d.b_end)++;
  }
  return d;
}

inline std::string word_string(std::uint64_t bits, std::size_t length) {
  std::string w(length, 'A');
  for (std::size_t i = 0; i < length; ++i) {
    if ((bits >> (length - 1 - i)) & 1U) w[i] = 'B';
  }
  return w;
}

inline std::vector<std::string> all_words(std::size_t length) {
  std::vector<std::string> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << length); ++bits) out.push_back(word_string(bits, length));
  return out;
}

inline std::string random_word(std::mt19937_64& rng, std::size_t length) {
  std::string w(length, 'A');
  for (auto& c : w) {
    if (rng() & 1U) c = 'B';
  }
  return w;
}

inline std::uint64_t totient_by_count(std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t a = 1; a <= n; ++a) count += std::gcd(a, n) == 1 ? 1 : 0;
  return count;
}

/// Continued fraction of p/q by repeated floor, on plain integers.
inline std::vector<std::uint64_t> cf_slow(std::uint64_t p, std::uint64_t q) {
  std::vector<std::uint64_t> out;
  while (q != 0) {
    std::uint64_t c = 0;
    while (p >= q) {
      p -= q;
      ++c;
    }
    out.push_back(c);
    std::swap(p, q);
  }
  return out;
}

inline std::vector<std::uint64_t> fibonacci_table(std::size_t count) {
  std::vector<std::uint64_t> f{0, 1};
  while (f.size() < count) f.push_back(f[f.size() - 1] + f[f.size() - 2]);
  return f;
}

}  // namespace subseq::oracle
