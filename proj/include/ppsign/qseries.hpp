/*
 * Copyright 2026 The ppsign Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef PPSIGN_QSERIES_HPP
#define PPSIGN_QSERIES_HPP

#include <vector>

#include "ppsign/number.hpp"

namespace ppsign {

/// Rising factorial (a)_n = a(a+1)...(a+n-1); (a)_0 = 1.
Rational shifted_factorial(const Rational& a, long n);

/// Binomial coefficient. Zero for k < 0 and for 0 <= n < k; for negative n
/// the falling-factorial polynomial n(n-1)...(n-k+1)/k! is used.
BigInt binom(long n, long k);
BigInt binom(const BigInt& n, long k);

/// Binomial with a rational top: x(x-1)...(x-k+1)/k!, zero for k < 0.
Rational binom_poly(const Rational& x, long k);

/// Gaussian binomial [n choose k]_q at q = -1:
/// 0 if n is even and k odd, binom(n/2, k/2) (floors) otherwise, and 0 outside
/// 0 <= k <= n.
BigInt qbinom_minus1(long n, long k);

/// Number of plane partitions in an a x b x c box,
/// prod_{i=1}^{a} (c+i)_b / (i)_b.
BigInt macmahon_box(long a, long b, long c);

struct HyperParams {
  std::vector<Rational> upper;
  std::vector<Rational> lower;
  Rational argument;
};

/// Length of the terminating range: the smallest n0 such that some upper
/// parameter equals -n0. Throws InvalidInput if the series does not
/// terminate.
long terminating_order(const HyperParams& p);

/// Exact value of the terminating series sum_{n>=0} prod (a_i)_n /
/// prod (b_i)_n * z^n / n!. Throws Division (message names the index) when a
/// lower factor vanishes inside the range.
Rational hyper_terminating(const HyperParams& p);

/// Closed-form right side of the Pfaff-Saalschutz sum
/// 3F2[a, b, -n; c, 1+a+b-c-n; 1] = (c-a)_n (c-b)_n / ((c)_n (c-a-b)_n).
Rational pfaff_saalschutz_rhs(const Rational& a, const Rational& b,
                              const Rational& c, long n);

}  // namespace ppsign

#endif  // PPSIGN_QSERIES_HPP
