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

#include "subseq/approx.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "subseq/errors.hpp"
#include "subseq/parallel.hpp"

namespace subseq {

BoundedQuotientTarget::BoundedQuotientTarget(std::vector<std::uint64_t> prefix,
                                             std::optional<std::vector<std::uint64_t>> tail, std::uint64_t bound)
    : prefix_(std::move(prefix)), tail_(std::move(tail)), bound_(bound) {
  if (bound_ < 1) throw InvalidArgument("target: quotient bound C must be >= 1");
  if (prefix_.empty() || prefix_.front() != 0) {
    throw InvalidArgument("target: prefix must start with c0 = 0 (xi in (0, 1))");
  }
  if (tail_ && tail_->empty()) throw InvalidArgument("target: periodic tail must be nonempty");
  if (!tail_ && prefix_.size() < 2) throw InvalidArgument("target: need at least one quotient after c0");
  auto in_range = [this](std::uint64_t c) { return c >= 1 && c <= bound_; };
  if (!std::all_of(prefix_.begin() + 1, prefix_.end(), in_range) || (tail_ && !std::all_of(tail_->begin(), tail_->end(), in_range))) {
    throw InvalidArgument("target: quotients must lie in [1, " + std::to_string(bound_) + "]");
  }
}

BoundedQuotientTarget BoundedQuotientTarget::golden() {
  return BoundedQuotientTarget({0}, std::vector<std::uint64_t>{1}, 1);
}

BoundedQuotientTarget BoundedQuotientTarget::silver() {
  return BoundedQuotientTarget({0}, std::vector<std::uint64_t>{2}, 2);
}

std::optional<std::uint64_t> BoundedQuotientTarget::quotient(std::size_t i) const {
  if (i < prefix_.size()) return prefix_[i];
  if (!tail_) return std::nullopt;
  return (*tail_)[(i - prefix_.size()) % tail_->size()];
}

namespace {

// Steps (p_{k-1}, q_{k-1}), (p_k, q_k) forward by quotient c.
void advance(Convergent& prev, Convergent& cur, std::uint64_t c) {
  Integer p = from_u64(c) * cur.p + prev.p;
  Integer q = from_u64(c) * cur.q + prev.q;
  prev = std::move(cur);
  cur = {std::move(p), std::move(q)};
}

Rational ratio_of(const Convergent& c) {
  Rational r(c.p, c.q);
  r.canonicalize();
  return r;
}

}  // namespace

Convergent convergent(const BoundedQuotientTarget& t, std::size_t k) {
  Convergent prev{0, 1};
  Convergent cur{1, 0};
  for (std::size_t i = 0; i <= k; ++i) {
    auto c = t.quotient(i);
    if (!c) {
      throw InvalidArgument("target has only " + std::to_string(t.prefix().size()) +
                            " quotients; convergent " + std::to_string(k) + " unavailable");
    }
    advance(prev, cur, *c);
  }
  return cur;
}

Rational eval_target(const BoundedQuotientTarget& t, std::size_t k) { return ratio_of(convergent(t, k)); }

std::vector<Integer> convergent_denominators(const BoundedQuotientTarget& t, const Integer& max_den) {
  std::vector<Integer> out;
  Convergent prev{0, 1};
  Convergent cur{1, 0};
  for (std::size_t i = 0;; ++i) {
    auto c = t.quotient(i);
    if (!c) break;
    advance(prev, cur, *c);
    if (cur.q > max_den) break;
    if (i >= 1 && (out.empty() || out.back() != cur.q)) out.push_back(cur.q);
  }
  return out;
}

TargetValue target_value(const BoundedQuotientTarget& t, const Integer& min_den) {
  Convergent prev{0, 1};
  Convergent cur{1, 0};
  for (std::size_t i = 0;; ++i) {
    auto c = t.quotient(i);
    if (!c) return {ratio_of(cur), Rational(0)};
    advance(prev, cur, *c);
    if (cur.q > min_den) {
      Rational err(Integer(1), cur.q * cur.q);
      return {ratio_of(cur), err};
    }
  }
}

CoprimeApproximation best_coprime_numerator(const BoundedQuotientTarget& t, std::uint64_t modulus) {
  if (modulus < 2) throw InvalidArgument("best_coprime_numerator: N must be >= 2");
  const Integer n = from_u64(modulus);
  // Denominator above N^4 keeps |xi - x| far below the 1/N^2 scale of delta;
  // the extra 2^64 pushes it under double resolution for the decimal columns.
  const Integer min_den = Integer(n * n * n * n) << 64;
  const TargetValue x = target_value(t, min_den);

  Integer scaled = x.value.get_num() * n;
  mpz_fdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), x.value.get_den().get_mpz_t());
  const std::uint64_t centre = to_u64(scaled);

  auto distance = [&](std::uint64_t a) -> Rational {
    Rational d = x.value - Rational(from_u64(a), n);
    d.canonicalize();
    return Rational(abs(d));
  };

  std::optional<std::uint64_t> below;
  for (std::uint64_t a = std::min(centre, modulus - 1); a >= 1; --a) {
    if (std::gcd(a, modulus) == 1) {
      below = a;
      break;
    }
  }
  std::optional<std::uint64_t> above;
  for (std::uint64_t a = std::max<std::uint64_t>(centre + 1, 1); a < modulus; ++a) {
    if (std::gcd(a, modulus) == 1) {
      above = a;
      break;
    }
  }
  SUBSEQ_CHECK_INVARIANT(below || above, "no unit modulo N");

  std::uint64_t best = 0;
  if (below && above) {
    best = distance(*above) < distance(*below) ? *above : *below;
  } else {
    best = below ? *below : *above;
  }
  return {best, distance(best), x.error_bound};
}

ApproxReport approx_experiment(const BoundedQuotientTarget& t, std::uint64_t modulus) {
  CoprimeApproximation approx = best_coprime_numerator(t, modulus);
  ApproxReport report;
  report.modulus = modulus;
  report.a = approx.a;
  report.delta = approx.delta;
  report.delta_error = approx.delta_error;

  const Integer a = from_u64(approx.a);
  const Integer b = from_u64(modulus - approx.a);
  const RunLengthWord word = gen(a, b);
  report.word_length = to_u64(word.length());
  SUBSEQ_CHECK_INVARIANT(word_to_pair(word) == CoprimePair(a, b), "gen(a, N - a) does not invert to (a, N - a)");
  if (report.word_length <= 4096) {
    SUBSEQ_CHECK_INVARIANT(count_subsequences(word.expand()) == from_u64(modulus - 1),
                           "gen(a, N - a) does not have N - 1 subsequences");
  }
  for (const auto& c : cf_of_rational(a, from_u64(modulus)).quotients) {
    report.max_quotient = std::max(report.max_quotient, to_u64(c));
  }

  const double c = static_cast<double>(t.bound());
  const double nd = static_cast<double>(modulus);
  report.bound_term1 = c * std::log(nd);
  report.bound_term2 = nd * std::sqrt(report.delta.get_d() * c * c * c);
  const double denom = report.bound_term1 + report.bound_term2;
  report.ratio = denom > 0.0 ? static_cast<double>(report.word_length) / denom : 0.0;
  return report;
}

std::vector<ApproxReport> bound_sweep(const BoundedQuotientTarget& t, const std::vector<std::uint64_t>& moduli,
                                      unsigned jobs) {
  return parallel_map(moduli.size(), jobs, [&](std::size_t i) { return approx_experiment(t, moduli[i]); }, 1);
}

}  // namespace subseq
