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

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "oracles.hpp"
#include "subseq/approx.hpp"
#include "subseq/errors.hpp"

namespace subseq {
namespace {

const double kInvPhi = (std::sqrt(5.0) - 1.0) / 2.0;

TEST(Target, Validation) {
  EXPECT_THROW(BoundedQuotientTarget({1, 1}, std::nullopt, 2), InvalidArgument);
  EXPECT_THROW(BoundedQuotientTarget({0}, std::nullopt, 2), InvalidArgument);
  EXPECT_THROW(BoundedQuotientTarget({0, 3}, std::nullopt, 2), InvalidArgument);
  EXPECT_THROW(BoundedQuotientTarget({0}, std::vector<std::uint64_t>{}, 2), InvalidArgument);
  EXPECT_THROW(BoundedQuotientTarget({0}, std::vector<std::uint64_t>{0}, 2), InvalidArgument);
  EXPECT_THROW(BoundedQuotientTarget({0, 1}, std::nullopt, 0), InvalidArgument);
  const BoundedQuotientTarget t({0, 2}, std::vector<std::uint64_t>{1, 3}, 3);
  EXPECT_EQ(t.quotient(1), 2U);
  EXPECT_EQ(t.quotient(2), 1U);
  EXPECT_EQ(t.quotient(3), 3U);
  EXPECT_EQ(t.quotient(4), 1U);
}

TEST(EvalTarget, Examples) {
  EXPECT_EQ(eval_target(BoundedQuotientTarget::golden(), 6), Rational(8, 13));
  const BoundedQuotientTarget half({0, 2}, std::nullopt, 2);
  EXPECT_EQ(eval_target(half, 1), Rational(1, 2));
  EXPECT_THROW(eval_target(half, 2), InvalidArgument);
  EXPECT_EQ(eval_target(BoundedQuotientTarget::silver(), 4), Rational(12, 29));
}

TEST(EvalTarget, GoldenConvergentsAreFibonacciRatios) {
  const auto fib = oracle::fibonacci_table(60);
  for (std::size_t k = 1; k + 2 < 60; ++k) {
    const Rational r = eval_target(BoundedQuotientTarget::golden(), k);
    ASSERT_EQ(r, Rational(from_u64(fib[k]), from_u64(fib[k + 1]))) << k;
  }
}

TEST(ConvergentDenominators, Golden) {
  const auto dens = convergent_denominators(BoundedQuotientTarget::golden(), Integer(100));
  const std::vector<Integer> expected{1, 2, 3, 5, 8, 13, 21, 34, 55, 89};
  EXPECT_EQ(dens, expected);
}

TEST(TargetValue, ErrorBoundHolds) {
  const auto v = target_value(BoundedQuotientTarget::golden(), Integer(1000));
  EXPECT_GT(v.value.get_den(), 1000);
  EXPECT_NEAR(v.value.get_d(), kInvPhi, v.error_bound.get_d());
  const auto exact = target_value(BoundedQuotientTarget({0, 2}, std::nullopt, 2), Integer(1000));
  EXPECT_EQ(exact.value, Rational(1, 2));
  EXPECT_EQ(exact.error_bound, 0);
}

TEST(BestCoprime, Examples) {
  const auto g13 = best_coprime_numerator(BoundedQuotientTarget::golden(), 13);
  EXPECT_EQ(g13.a, 8U);
  EXPECT_NEAR(g13.delta.get_d(), kInvPhi - 8.0 / 13.0, 1e-12);
  EXPECT_NEAR(g13.delta.get_d(), 2.6493733652795e-3, 1e-12);

  EXPECT_EQ(best_coprime_numerator(BoundedQuotientTarget::golden(), 10).a, 7U);
  EXPECT_EQ(best_coprime_numerator(BoundedQuotientTarget::golden(), 2).a, 1U);
  EXPECT_THROW(best_coprime_numerator(BoundedQuotientTarget::golden(), 1), InvalidArgument);
}

TEST(BestCoprime, MatchesFloatingScan) {
  // Nearest unit by a plain double scan; golden-ratio distances never tie.
  for (std::uint64_t n = 2; n <= 2000; ++n) {
    std::uint64_t best = 0;
    double best_d = 2.0;
    for (std::uint64_t a = 1; a < n; ++a) {
      if (std::gcd(a, n) != 1) continue;
      const double d = std::abs(kInvPhi - static_cast<double>(a) / static_cast<double>(n));
      if (d < best_d) {
        best_d = d;
        best = a;
      }
    }
    ASSERT_EQ(best_coprime_numerator(BoundedQuotientTarget::golden(), n).a, best) << n;
  }
}

TEST(BestCoprime, TieGoesToSmallerNumerator) {
  // xi = 1/2 with N = 4: units 1 and 3 are both 1/4 away.
  const BoundedQuotientTarget half({0, 2}, std::nullopt, 2);
  const auto r = best_coprime_numerator(half, 4);
  EXPECT_EQ(r.a, 1U);
  EXPECT_EQ(r.delta, Rational(1, 4));
  EXPECT_EQ(r.delta_error, 0);
}

TEST(ApproxExperiment, Examples) {
  const auto g = approx_experiment(BoundedQuotientTarget::golden(), 13);
  EXPECT_EQ(g.a, 8U);
  EXPECT_EQ(g.word_length, oracle::gen_slow(8, 5).size());
  EXPECT_EQ(g.word_length, 4U);
  EXPECT_NEAR(g.bound_term1, std::log(13.0), 1e-12);
  EXPECT_NEAR(g.bound_term2, 13.0 * std::sqrt(g.delta.get_d()), 1e-12);

  const auto s = approx_experiment(BoundedQuotientTarget::silver(), 29);
  EXPECT_EQ(s.a, 12U);
  EXPECT_EQ(s.word_length, 6U);
  EXPECT_EQ(oracle::gen_slow(12, 17).size(), 6U);
  EXPECT_EQ(s.max_quotient, 2U);

  const auto two = approx_experiment(BoundedQuotientTarget::golden(), 2);
  EXPECT_EQ(two.word_length, 0U);
}

TEST(ApproxExperiment, FibonacciModuliBeatInverseSquare) {
  const auto fib = oracle::fibonacci_table(40);
  for (std::size_t k = 4; k < fib.size(); ++k) {
    const auto r = approx_experiment(BoundedQuotientTarget::golden(), fib[k]);
    const Rational limit(Integer(1), from_u64(fib[k]) * from_u64(fib[k]));
    ASSERT_LT(r.delta + r.delta_error, limit) << fib[k];
    ASSERT_EQ(r.a, fib[k - 1]) << fib[k];
    ASSERT_EQ(r.word_length, k - 3) << fib[k];
  }
}

TEST(BoundSweep, OrderAndDeterminism) {
  const std::vector<std::uint64_t> moduli{1000, 13, 89, 500, 7};
  const auto serial = bound_sweep(BoundedQuotientTarget::silver(), moduli, 1);
  const auto parallel = bound_sweep(BoundedQuotientTarget::silver(), moduli, 3);
  ASSERT_EQ(serial.size(), moduli.size());
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    EXPECT_EQ(serial[i].modulus, moduli[i]);
    EXPECT_EQ(serial[i].a, parallel[i].a);
    EXPECT_EQ(serial[i].delta, parallel[i].delta);
  }
  EXPECT_TRUE(bound_sweep(BoundedQuotientTarget::golden(), {}, 2).empty());
}

}  // namespace
}  // namespace subseq
