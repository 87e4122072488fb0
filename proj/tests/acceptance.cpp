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

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is nonzero
// when any criterion fails. Optional `--csv-dir DIR` keeps the diagnostic
// sweeps for criteria 11 and 13.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "oracles.hpp"
#include "subseq/approx.hpp"
#include "subseq/euclid_cf.hpp"
#include "subseq/extremal.hpp"
#include "subseq/io.hpp"
#include "subseq/search.hpp"
#include "subseq/word.hpp"

namespace {

using namespace subseq;

// Pinned thresholds.
constexpr double kGenRuntimeLimit = 30.0;
constexpr double kOracleRuntimeLimit = 120.0;
constexpr double kShortestRuntimeLimit = 300.0;
constexpr double kZarembaRuntimeLimit = 60.0;
constexpr double kGrowthRatioLimit = 4.0;
constexpr double kApproxRatioLimit = 10.0;
constexpr std::uint64_t kRandomOracleWords = 10'000;
constexpr std::uint64_t kConcatSamples = 10'000;

struct Verdict {
  bool pass;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), f, v);
  return buf;
}

template <typename Fn>
void for_coprime_pairs(unsigned long max_sum, Fn&& fn) {
  for (unsigned long s = 2; s <= max_sum; ++s) {
    for (unsigned long a = 1; a < s; ++a) {
      if (std::gcd(a, s) == 1) fn(a, s - a);
    }
  }
}

BinaryWord word_of(std::uint64_t bits, std::size_t len) { return word_from_bits(bits, len); }

std::uint64_t dp_count(const BinaryWord& w) { return *count_subsequences_u64(w.letters()); }

Verdict criterion1() {
  const auto start = Clock::now();
  std::uint64_t pairs = 0, brute = 0, bad = 0;
  for_coprime_pairs(400, [&](unsigned long a, unsigned long b) {
    ++pairs;
    const BinaryWord w = gen_word(Integer(a), Integer(b));
    if (count_subsequences(w) != Integer(a + b - 1)) ++bad;
    if (w.size() <= 18) {
      ++brute;
      if (brute_force_count(w) != a + b - 1) ++bad;
    }
  });
  const double t = seconds_since(start);
  return {bad == 0 && t < kGenRuntimeLimit, std::to_string(pairs) + " pairs, " + std::to_string(brute) +
                                                " brute-forced, " + std::to_string(bad) + " mismatches, " +
                                                fmt("%.1f s", t)};
}

Verdict criterion2() {
  const auto start = Clock::now();
  std::uint64_t words = 0, bad = 0;
  for (std::size_t len = 0; len <= 14; ++len) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
      const BinaryWord w = word_of(bits, len);
      ++words;
      if (count_subsequences(w) != Integer(brute_force_count(w))) ++bad;
    }
  }
  std::mt19937_64 rng(20260101);
  for (std::uint64_t i = 0; i < kRandomOracleWords; ++i) {
    const std::size_t len = 15 + rng() % 4;
    const BinaryWord w = word_of(rng() & ((std::uint64_t{1} << len) - 1), len);
    ++words;
    if (count_subsequences(w) != Integer(brute_force_count(w))) ++bad;
  }
  const double t = seconds_since(start);
  return {bad == 0 && t < kOracleRuntimeLimit,
          std::to_string(words) + " words, " + std::to_string(bad) + " mismatches, " + fmt("%.1f s", t)};
}

Verdict criterion3() {
  std::uint64_t words = 0, pairs = 0, bad = 0;
  for (std::size_t len = 0; len <= 14; ++len) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
      const BinaryWord w = word_of(bits, len);
      ++words;
      if (gen(word_to_pair(w)).expand() != w) ++bad;
    }
  }
  for_coprime_pairs(400, [&](unsigned long a, unsigned long b) {
    ++pairs;
    if (!(word_to_pair(gen_word(Integer(a), Integer(b))) == CoprimePair(a, b))) ++bad;
  });
  return {bad == 0, std::to_string(words) + " words, " + std::to_string(pairs) + " pairs, " + std::to_string(bad) +
                        " mismatches"};
}

Verdict criterion4() {
  // Words with N subsequences have length at most N - 1.
  constexpr std::uint64_t kMaxN = 20;
  std::map<std::uint64_t, std::uint64_t> found;
  for (std::size_t len = 0; len < kMaxN; ++len) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
      const std::uint64_t c = dp_count(word_of(bits, len));
      if (c <= kMaxN) ++found[c];
    }
  }
  std::uint64_t bad = 0;
  for (std::uint64_t n = 1; n <= kMaxN; ++n) {
    if (found[n] != euler_phi(n + 1)) ++bad;
  }
  for (std::uint64_t n = 1; n <= 300; ++n) {
    std::set<std::string> distinct;
    for (std::uint64_t a = 1; a <= n; ++a) {
      if (std::gcd(a, n + 1) != 1) continue;
      const BinaryWord w = gen_word(Integer(a), Integer(n + 1 - a));
      if (count_subsequences(w) != Integer(n)) ++bad;
      distinct.insert(w.str());
    }
    if (distinct.size() != euler_phi(n + 1)) ++bad;
  }
  return {bad == 0, "exhaustive N <= 20, generated N <= 300, " + std::to_string(bad) + " violations"};
}

Verdict criterion5() {
  std::mt19937_64 rng(424242);
  std::uint64_t bad = 0;
  for (std::uint64_t i = 0; i < kConcatSamples; ++i) {
    const std::size_t total = rng() % 17;
    const std::size_t ls = rng() % (total + 1);
    const std::size_t lt = total - ls;
    const BinaryWord s = BinaryWord::parse(oracle::random_word(rng, ls));
    const BinaryWord t = BinaryWord::parse(oracle::random_word(rng, lt));
    if (concat_count(profile(s), profile(t)) != Integer(brute_force_count(s + t))) ++bad;
  }
  return {bad == 0, std::to_string(kConcatSamples) + " pairs, " + std::to_string(bad) + " mismatches"};
}

Verdict criterion6() {
  std::uint64_t bad = 0;
  for_coprime_pairs(1000, [&](unsigned long a, unsigned long b) {
    if (word_to_cf(gen(Integer(a), Integer(b))) != cf_of_rational(a, b)) ++bad;
  });
  for (unsigned long n = 2; n <= 500; ++n) {
    for (unsigned long a = 1; a < n; ++a) {
      if (std::gcd(a, n) != 1) continue;
      if (partial_quotient_sum(Integer(a), Integer(n)) != gen(Integer(a), Integer(n - a)).length() + 2) ++bad;
    }
  }
  return {bad == 0, std::to_string(bad) + " mismatches"};
}

Verdict criterion7() {
  std::uint64_t cases = 0, bad = 0;
  std::vector<BinaryWord> bases{BinaryWord{}};
  for (std::size_t len = 1; len <= 7; ++len) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
      if (bits & 1U) bases.push_back(word_of(bits, len));
    }
  }
  for (const auto& base : bases) {
    for (std::size_t n = 1; n <= 5; ++n) {
      ++cases;
      const auto r = best_extension(base, n);
      if (r.best_t != z(n)) ++bad;
      if (!base.empty() && !r.unique) ++bad;
    }
  }
  return {bad == 0, std::to_string(cases) + " (base, n) cases, " + std::to_string(bad) + " violations"};
}

Verdict criterion8() {
  std::uint64_t bad = 0;
  for (std::size_t n = 0; n <= 14; ++n) {
    std::uint64_t best = 0;
    std::set<std::string> argmax;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      const BinaryWord w = word_of(bits, n);
      const std::uint64_t c = dp_count(w);
      if (c > best) {
        best = c;
        argmax.clear();
      }
      if (c == best) argmax.insert(w.str());
    }
    const std::set<std::string> expected{z(n).str(), star(z(n)).str()};
    if (argmax != expected) ++bad;
    if (Integer(best) != fibonacci(n + 3) - 1) ++bad;
  }
  return {bad == 0, "n <= 14, " + std::to_string(bad) + " violations"};
}

Verdict criterion9() {
  std::uint64_t bad = 0;
  for (std::size_t n = 0; n <= 16; ++n) {
    if (mean_subseq_exact(n) != mean_closed_form(n)) ++bad;
  }
  return {bad == 0, "n <= 16, " + std::to_string(bad) + " mismatches"};
}

Verdict criterion10() {
  const auto start = Clock::now();
  std::uint64_t bad = 0;
  for (std::uint64_t n = 1; n <= 200; ++n) {
    if (shortest_word(n).word_length != brute_force_shortest(n).size()) ++bad;
  }
  for (std::uint64_t n = 1; n <= 100'000; ++n) {
    const auto r = shortest_word(n);
    const BinaryWord w = r.word.expand();
    if (w.size() != r.word_length) ++bad;
    if (count_subsequences_u64(w.letters()) != n) ++bad;
    if (r.word_length < min_length_lower_bound(n)) ++bad;
  }
  const double t = seconds_since(start);
  return {bad == 0 && t < kShortestRuntimeLimit,
          "brute force n <= 200, checked n <= 100000, " + std::to_string(bad) + " violations, " + fmt("%.1f s", t)};
}

Verdict criterion11(const std::filesystem::path& csv_dir) {
  io::CsvTable table{{"n", "word_length", "lower_bound", "ln_n_lnln_n", "ratio"}, {}};
  double worst = 0.0;
  for (unsigned e = 10; e <= 20; e += 2) {
    const std::uint64_t n = std::uint64_t{1} << e;
    const auto r = shortest_word(n);
    const double scale = std::log(static_cast<double>(n)) * std::log(std::log(static_cast<double>(n)));
    const double ratio = static_cast<double>(r.word_length) / scale;
    worst = std::max(worst, ratio);
    table.rows.push_back({std::to_string(n), std::to_string(r.word_length), std::to_string(r.lower_bound),
                          io::format_fixed(scale), io::format_fixed(ratio)});
  }
  if (!csv_dir.empty()) std::ofstream(csv_dir / "shortest_growth.csv") << table.str();
  return {worst <= kGrowthRatioLimit, "max length/(ln n ln ln n) = " + fmt("%.3f", worst) + " (limit " +
                                          fmt("%.1f", kGrowthRatioLimit) + ")"};
}

Verdict criterion12() {
  const auto start = Clock::now();
  const auto results = zaremba_scan(2, 10'000, 5, 4);
  std::uint64_t absent = 0;
  std::string first_absent;
  for (const auto& r : results) {
    if (!r.witness) {
      if (absent == 0) first_absent = ", first absent N = " + std::to_string(r.modulus);
      ++absent;
    }
  }
  const double t = seconds_since(start);
  return {absent == 0 && results.size() == 9'999 && t < kZarembaRuntimeLimit,
          std::to_string(results.size()) + " moduli, " + std::to_string(absent) + " absent" + first_absent + ", " +
              fmt("%.1f s", t)};
}

Verdict criterion13(const std::filesystem::path& csv_dir) {
  const auto target = BoundedQuotientTarget::golden();
  std::vector<std::uint64_t> moduli;
  for (const auto& q : convergent_denominators(target, Integer(10'000))) {
    if (q >= 2) moduli.push_back(to_u64(q));
  }
  const auto reports = bound_sweep(target, moduli, 1);
  io::CsvTable table{io::approx_csv_header(), {}};
  std::uint64_t bad = 0;
  double worst = 0.0;
  for (const auto& r : reports) {
    const Integer n = from_u64(r.modulus);
    // delta is known to within delta_error; require the whole interval below 1/N^2.
    if (!(r.delta + r.delta_error < Rational(Integer(1), Integer(n * n)))) ++bad;
    worst = std::max(worst, r.ratio);
    table.rows.push_back(io::approx_csv_row(r));
  }
  if (!csv_dir.empty()) std::ofstream(csv_dir / "approx_golden.csv") << table.str();
  return {bad == 0 && worst <= kApproxRatioLimit && !reports.empty(),
          std::to_string(reports.size()) + " convergent denominators, " + std::to_string(bad) +
              " delta violations, max ratio " + fmt("%.3f", worst) + " (limit " + fmt("%.1f", kApproxRatioLimit) +
              ")"};
}

Verdict criterion14() {
  auto scan = [](const char* jobs) {
    std::ostringstream out, err;
    const int code = cli::run({"zaremba-scan", "2", "1000", "--jobs", jobs, "--format", "csv"}, out, err);
    return std::make_pair(code, out.str());
  };
  const auto one = scan("1");
  const auto eight = scan("8");
  const bool ok = one.first == 0 && eight.first == 0 && one.second == eight.second && !one.second.empty();
  return {ok, std::to_string(one.second.size()) + " bytes, " + (one.second == eight.second ? "identical" : "differ")};
}

}  // namespace

int main(int argc, char** argv) {
  std::filesystem::path csv_dir;
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--csv-dir") csv_dir = argv[i + 1];
  }

  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"gen word has a+b-1 subsequences", criterion1},
      {"DP count matches brute-force enumeration", criterion2},
      {"gen and word_to_pair are inverse", criterion3},
      {"phi(N+1) words with N subsequences", criterion4},
      {"concatenation count formula", criterion5},
      {"continued fraction duality and S_N identity", criterion6},
      {"alternating extension maximizes count", criterion7},
      {"alternating word is the per-length maximum", criterion8},
      {"mean count is 2(3/2)^n - 1", criterion9},
      {"shortest word correctness", criterion10},
      {"shortest word growth envelope", [&] { return criterion11(csv_dir); }},
      {"Zaremba witnesses with C=5 up to 10^4", criterion12},
      {"golden-ratio approximation sweep", [&] { return criterion13(csv_dir); }},
      {"zaremba-scan output independent of --jobs", criterion14},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v{false, ""};
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    if (!v.pass) ++failures;
    std::printf("%s %2zu %s: %s\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
