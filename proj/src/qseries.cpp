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

#include "ppsign/qseries.hpp"

#include <optional>
#include <string>

#include "ppsign/error.hpp"

namespace ppsign {

Rational shifted_factorial(const Rational& a, long n) {
  require(n >= 0, ErrorKind::Domain, "shifted factorial with negative length");
  Rational r(1);
  Rational x = a;
  for (long i = 0; i < n; ++i, x += 1) r *= x;
  return r;
}

BigInt binom(long n, long k) {
  if (k < 0) return BigInt(0);
  if (n >= 0 && k > n) return BigInt(0);
  return binom(BigInt(n), k);
}

BigInt binom(const BigInt& n, long k) {
  if (k < 0) return BigInt(0);
  if (n >= 0 && BigInt(k) > n) return BigInt(0);
  BigInt r;
  // mpz_bin_ui applies the polynomial extension for negative n.
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

Rational binom_poly(const Rational& x, long k) {
  if (k < 0) return Rational(0);
  Rational r(1);
  for (long i = 0; i < k; ++i) r *= (x - i) / (i + 1);
  return r;
}

BigInt qbinom_minus1(long n, long k) {
  if (k < 0 || k > n) return BigInt(0);
  if (n % 2 == 0 && k % 2 == 1) return BigInt(0);
  return binom(n / 2, k / 2);
}

BigInt macmahon_box(long a, long b, long c) {
  require(a >= 0 && b >= 0 && c >= 0, ErrorKind::Domain,
          "box sides must be nonnegative");
  Rational r(1);
  for (long i = 1; i <= a; ++i)
    r *= shifted_factorial(Rational(c + i), b) / shifted_factorial(Rational(i), b);
  if (!is_integer(r))
    fail(ErrorKind::InternalConsistency, "box product is not an integer");
  return r.get_num();
}

namespace {

std::optional<long> nonpositive_integer(const Rational& v) {
  if (!is_integer(v) || v > 0) return std::nullopt;
  const BigInt m = -v.get_num();
  if (!m.fits_slong_p())
    fail(ErrorKind::ResourceLimit, "terminating order does not fit a long");
  return m.get_si();
}

}  // namespace

long terminating_order(const HyperParams& p) {
  std::optional<long> best;
  for (const auto& a : p.upper)
    if (auto m = nonpositive_integer(a); m && (!best || *m < *best)) best = m;
  if (!best)
    fail(ErrorKind::InvalidInput,
         "series does not terminate: no upper parameter is a nonpositive "
         "integer");
  return *best;
}

Rational hyper_terminating(const HyperParams& p) {
  const long order = terminating_order(p);
  Rational term(1);
  Rational total(1);
  for (long n = 0; n < order; ++n) {
    for (std::size_t i = 0; i < p.lower.size(); ++i) {
      if (p.lower[i] + n == 0)
        fail(ErrorKind::Division,
             "lower parameter " + std::to_string(i) + " (" +
                 to_decimal(p.lower[i]) + ") gives a zero factor at index " +
                 std::to_string(n + 1));
    }
    for (const auto& a : p.upper) term *= a + n;
    for (const auto& b : p.lower) term /= b + n;
    term *= p.argument;
    term /= n + 1;
    total += term;
  }
  return total;
}

Rational pfaff_saalschutz_rhs(const Rational& a, const Rational& b,
                              const Rational& c, long n) {
  require(n >= 0, ErrorKind::Domain, "negative n in Pfaff-Saalschutz");
  const Rational den = shifted_factorial(c, n) * shifted_factorial(c - a - b, n);
  if (den == 0)
    fail(ErrorKind::SingularParameter,
         "Pfaff-Saalschutz denominator vanishes for c = " + to_decimal(c) +
             ", c-a-b = " + to_decimal(Rational(c - a - b)));
  return shifted_factorial(c - a, n) * shifted_factorial(c - b, n) / den;
}

}  // namespace ppsign
