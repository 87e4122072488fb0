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

#include "subseq/euclid_cf.hpp"
#include "subseq/integer.hpp"

namespace subseq {

/// An irrational (or, without a tail, rational) xi in (0, 1) given by its
/// partial quotients [0; c1, c2, ...]: a finite prefix followed by an
/// optional block repeated forever. Every quotient after c0 lies in [1, C].
class BoundedQuotientTarget {
 public:
  BoundedQuotientTarget(std::vector<std::uint64_t> prefix, std::optional<std::vector<std::uint64_t>> tail,
                        std::uint64_t bound);

  /// 1/phi = [0; 1, 1, 1, ...] with C = 1.
  static BoundedQuotientTarget golden();
  /// sqrt(2) - 1 = [0; 2, 2, 2, ...] with C = 2.
  static BoundedQuotientTarget silver();

  const std::vector<std::uint64_t>& prefix() const noexcept { return prefix_; }
  const std::optional<std::vector<std::uint64_t>>& tail() const noexcept { return tail_; }
  std::uint64_t bound() const noexcept { return bound_; }

  /// c_i, or nullopt past the end of a tail-less expansion.
  std::optional<std::uint64_t> quotient(std::size_t i) const;

 private:
  std::vector<std::uint64_t> prefix_;
  std::optional<std::vector<std::uint64_t>> tail_;
  std::uint64_t bound_;
};

struct Convergent {
  Integer p;
  Integer q;
};

/// p_k / q_k from the three-term recurrence. Throws InvalidArgument when a
/// tail-less target has fewer than k + 1 quotients.
Convergent convergent(const BoundedQuotientTarget& t, std::size_t k);
Rational eval_target(const BoundedQuotientTarget& t, std::size_t k);

/// Denominators q_k of the target's convergents with q_k <= max_den, k >= 1.
std::vector<Integer> convergent_denominators(const BoundedQuotientTarget& t, const Integer& max_den);

/// xi to within `error_bound`: the first convergent with denominator above
/// `min_den`, or the exact value if the expansion ends first (error 0).
struct TargetValue {
  Rational value;
  Rational error_bound;
};
TargetValue target_value(const BoundedQuotientTarget& t, const Integer& min_den);

struct CoprimeApproximation {
  std::uint64_t a = 0;
  /// |x - a/N| where x is xi evaluated at a convergent with denominator > 2^64 N^4.
  Rational delta;
  /// |xi - x|; the true delta lies within this distance of `delta`.
  Rational delta_error;
};

/// Unit a mod N minimizing |xi - a/N|, scanning outward from xi N. Ties go
/// to the smaller a.
CoprimeApproximation best_coprime_numerator(const BoundedQuotientTarget& t, std::uint64_t modulus);

struct ApproxReport {
  std::uint64_t modulus = 0;
  std::uint64_t a = 0;
  Rational delta;
  Rational delta_error;
  std::uint64_t word_length = 0;
  /// Largest partial quotient of a/N (observed, not bounded by C in general).
  std::uint64_t max_quotient = 0;
  double bound_term1 = 0.0;  ///< C ln N
  double bound_term2 = 0.0;  ///< N sqrt(delta C^3)
  double ratio = 0.0;        ///< word_length / (term1 + term2)
};

ApproxReport approx_experiment(const BoundedQuotientTarget& t, std::uint64_t modulus);

/// One report per modulus, in input order.
std::vector<ApproxReport> bound_sweep(const BoundedQuotientTarget& t, const std::vector<std::uint64_t>& moduli,
                                      unsigned jobs = 1);

}  // namespace subseq
