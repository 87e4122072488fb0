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

#include "subseq/euclid_cf.hpp"

#include <algorithm>
#include <limits>
#include <utility>

#include "subseq/errors.hpp"

namespace subseq {

namespace {

Integer gcd_of(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

}  // namespace

CoprimePair::CoprimePair(Integer a, Integer b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_ < 1 || b_ < 1) {
    throw InvalidArgument("invalid pair (" + a_.get_str() + ", " + b_.get_str() + "): both entries must be >= 1");
  }
  if (gcd_of(a_, b_) != 1) {
    throw InvalidArgument("invalid pair (" + a_.get_str() + ", " + b_.get_str() + "): not coprime");
  }
}

bool ContinuedFraction::canonical() const {
  if (quotients.empty() || quotients.front() < 0) return false;
  for (std::size_t i = 1; i < quotients.size(); ++i) {
    if (quotients[i] < 1) return false;
  }
  if (quotients.size() == 1) return quotients.front() >= 1;
  return quotients.back() >= 2;
}

ContinuedFraction ContinuedFraction::canonicalized() const {
  if (quotients.empty()) throw InvalidArgument("continued fraction has no quotients");
  if (quotients.front() < 0) throw InvalidArgument("continued fraction has negative leading quotient");
  for (std::size_t i = 1; i < quotients.size(); ++i) {
    if (quotients[i] < 1) throw InvalidArgument("continued fraction quotients after the first must be >= 1");
  }
  ContinuedFraction out = *this;
  if (out.quotients.size() >= 2 && out.quotients.back() == 1) {
    out.quotients.pop_back();
    out.quotients.back() += 1;
  }
  if (out.quotients.size() == 1 && out.quotients.front() == 0) {
    throw InvalidArgument("continued fraction [0] is not a positive rational");
  }
  return out;
}

Rational ContinuedFraction::value() const {
  if (quotients.empty()) throw InvalidArgument("continued fraction has no quotients");
  Rational v(quotients.back());
  for (auto it = quotients.rbegin() + 1; it != quotients.rend(); ++it) {
    if (v == 0) throw InvalidArgument("continued fraction divides by zero");
    v = Rational(*it) + 1 / v;
  }
  v.canonicalize();
  return v;
}

Integer ContinuedFraction::quotient_sum() const {
  Integer s = 0;
  for (const auto& q : quotients) s += q;
  return s;
}

RunLengthWord RunLengthWord::from_word(const BinaryWord& w) {
  RunLengthWord out;
  if (w.empty()) return out;
  out.first = w[0];
  Letter current = w[0];
  std::size_t length = 0;
  for (Letter l : w.letters()) {
    if (l == current) {
      ++length;
    } else {
      out.runs.push_back(from_u64(length));
      current = l;
      length = 1;
    }
  }
  out.runs.push_back(from_u64(length));
  return out;
}

Integer RunLengthWord::length() const {
  Integer n = 0;
  for (const auto& r : runs) n += r;
  return n;
}

BinaryWord RunLengthWord::expand(std::size_t max_letters) const {
  const Integer n = length();
  if (n > from_u64(max_letters)) {
    throw BudgetExceeded("word has " + n.get_str() + " letters, above the expansion cap of " +
                         std::to_string(max_letters));
  }
  BinaryWord out;
  if (!first) return out;
  Letter l = *first;
  for (const auto& r : runs) {
    out += BinaryWord::run(l, static_cast<std::size_t>(to_u64(r)));
    l = complement(l);
  }
  return out;
}

RunLengthWord gen(const CoprimePair& p) {
  Integer a = p.a();
  Integer b = p.b();
  RunLengthWord out;
  auto emit = [&out](Letter l, Integer length) {
    if (!out.first) out.first = l;
    out.runs.push_back(std::move(length));
  };
  // b == 1 (resp. a == 1) is the last run: floor division would overshoot
  // it by one because the recursion stops at (1, 1), not (0, 1).
  while (a != 1 || b != 1) {
    if (a > b) {
      if (b == 1) {
        emit(Letter::A, a - 1);
        break;
      }
      emit(Letter::A, a / b);
      a %= b;
    } else {
      if (a == 1) {
        emit(Letter::B, b - 1);
        break;
      }
      emit(Letter::B, b / a);
      b %= a;
    }
  }
  return out;
}

RunLengthWord gen(const Integer& a, const Integer& b) { return gen(CoprimePair(a, b)); }

BinaryWord gen_word(const Integer& a, const Integer& b) { return gen(a, b).expand(); }

CoprimePair word_to_pair(const BinaryWord& s) {
  SubseqProfile p = profile(s);
  return CoprimePair(std::move(p.pA_start), std::move(p.pB_start));
}

CoprimePair word_to_pair(const RunLengthWord& s) {
  Integer a = 1;
  Integer b = 1;
  if (s.first) {
    // Prepending A^r to a word adds r * P^B to P^A; symmetric for B.
    Letter l = (s.runs.size() % 2 == 1) ? *s.first : complement(*s.first);
    for (auto it = s.runs.rbegin(); it != s.runs.rend(); ++it) {
      if (l == Letter::A) {
        a += *it * b;
      } else {
        b += *it * a;
      }
      l = complement(l);
    }
  }
  return CoprimePair(std::move(a), std::move(b));
}

ContinuedFraction cf_of_rational(const Integer& num, const Integer& den) {
  CoprimePair checked(num, den);
  ContinuedFraction cf;
  Integer p = checked.a();
  Integer q = checked.b();
  while (q != 0) {
    Integer quotient = p / q;
    Integer rest = p % q;
    cf.quotients.push_back(std::move(quotient));
    p = std::move(q);
    q = std::move(rest);
  }
  return cf;
}

ContinuedFraction word_to_cf(const RunLengthWord& s) {
  ContinuedFraction cf;
  if (!s.first) {
    cf.quotients.push_back(1);
    return cf;
  }
  if (*s.first == Letter::B) cf.quotients.push_back(0);
  cf.quotients.insert(cf.quotients.end(), s.runs.begin(), s.runs.end());
  cf.quotients.back() += 1;
  return cf;
}

ContinuedFraction word_to_cf(const BinaryWord& s) { return word_to_cf(RunLengthWord::from_word(s)); }

RunLengthWord cf_to_runs(const ContinuedFraction& cf) {
  std::vector<Integer> q = cf.canonicalized().quotients;
  q.back() -= 1;
  RunLengthWord out;
  if (q.size() == 1) {
    if (q.front() == 0) return out;
    out.first = Letter::A;
    out.runs = std::move(q);
    return out;
  }
  if (q.front() == 0) {
    out.first = Letter::B;
    out.runs.assign(q.begin() + 1, q.end());
  } else {
    out.first = Letter::A;
    out.runs = std::move(q);
  }
  return out;
}

BinaryWord cf_to_word(const ContinuedFraction& cf) { return cf_to_runs(cf).expand(); }

Integer partial_quotient_sum(const Integer& a, const Integer& n) {
  if (a < 1 || a >= n) {
    throw InvalidArgument("partial_quotient_sum: need 1 <= a < N, got a=" + a.get_str() + ", N=" + n.get_str());
  }
  if (gcd_of(a, n) != 1) {
    throw InvalidArgument("partial_quotient_sum: gcd(" + a.get_str() + ", " + n.get_str() + ") != 1");
  }
  Integer s = cf_of_rational(a, n).quotient_sum();
  SUBSEQ_CHECK_INVARIANT(s == gen(a, n - a).length() + 2, "S_N(a) != |gen(a, N-a)| + 2");
  return s;
}

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("euler_phi: n must be >= 1");
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p <= n / p; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

Integer fibonacci(unsigned long m) {
  Integer out;
  mpz_fib_ui(out.get_mpz_t(), m);
  return out;
}

}  // namespace subseq
