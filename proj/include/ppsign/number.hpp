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

#ifndef PPSIGN_NUMBER_HPP
#define PPSIGN_NUMBER_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace ppsign {

using BigInt = mpz_class;
/// mpq_class is kept canonical (reduced, positive denominator) by every
/// constructor below; raw mpq_class arithmetic already preserves this.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline int sign_of(const BigInt& v) { return sgn(v); }
inline int sign_of(const Rational& v) { return sgn(v); }

/// (-1)^e for any integer e, including negative ones.
constexpr int minus_one_pow(long long e) { return (e % 2 == 0) ? 1 : -1; }

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }
std::string to_decimal(const Rational& v);

BigInt factorial(long n);

}  // namespace ppsign

#endif  // PPSIGN_NUMBER_HPP
