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

#include "ppsign/formulas.hpp"

#include "ppsign/error.hpp"
#include "ppsign/exactalg.hpp"
#include "ppsign/lgv.hpp"
#include "ppsign/qseries.hpp"

namespace ppsign {

namespace {

Rational fact(long n) {
  require(n >= 0, ErrorKind::Domain,
          "factorial of negative argument " + std::to_string(n));
  return Rational(factorial(n));
}

Rational rising(const Rational& a, long n) { return shifted_factorial(a, n); }

BigInt as_integer(const Rational& v, std::string_view what) {
  require(is_integer(v), ErrorKind::InternalConsistency,
          std::string(what) + " evaluated to the non-integer " + to_decimal(v));
  return v.get_num();
}

void require_positive(long alpha) {
  require(alpha >= 1, ErrorKind::InvalidInput,
          "alpha must be positive, got " + std::to_string(alpha));
}

// (6k-2)!/(2k+alpha-1)! over k = 1..(alpha-1)/2.
Rational ase_product(long alpha) {
  Rational p(1);
  for (long k = 1; k <= (alpha - 1) / 2; ++k)
    p *= fact(6 * k - 2) / fact(2 * k + alpha - 1);
  return p;
}

BigInt box(long a, long b, long c) { return macmahon_box(a, b, c); }

}  // namespace

std::string_view to_string(TheoremId id) {
  switch (id) {
    case TheoremId::T1_TC: return "T1_TC";
    case TheoremId::T2_STC: return "T2_STC";
    case TheoremId::T3_STC_ODD_SHAPE: return "T3_STC_ODD_SHAPE";
    case TheoremId::T4_CSTC: return "T4_CSTC";
    case TheoremId::T5_TSSC: return "T5_TSSC";
    case TheoremId::T6_SC: return "T6_SC";
    case TheoremId::T7_CSSC: return "T7_CSSC";
    case TheoremId::CONJ_SC_ODD: return "CONJ_SC_ODD";
  }
  return "?";
}

std::string_view parameter_signature(TheoremId id) {
  switch (id) {
    case TheoremId::T1_TC: return "a, b";
    case TheoremId::T2_STC:
    case TheoremId::T3_STC_ODD_SHAPE: return "alpha, b";
    case TheoremId::T4_CSTC:
    case TheoremId::T5_TSSC:
    case TheoremId::T7_CSSC: return "alpha";
    case TheoremId::T6_SC:
    case TheoremId::CONJ_SC_ODD: return "a, b, c";
  }
  return "?";
}

std::string_view case_table(TheoremId id) {
  switch (id) {
    case TheoremId::T1_TC: return "0 for a even and b odd; product otherwise";
    case TheoremId::T2_STC:
      return "alpha even, b even; alpha odd, b even; 0 for b odd";
    case TheoremId::T3_STC_ODD_SHAPE:
      return "forced product times a polynomial, one case per parity of alpha and b";
    case TheoremId::T4_CSTC: return "squared product for alpha odd; 0 otherwise";
    case TheoremId::T5_TSSC: return "product for alpha odd; 0 otherwise";
    case TheoremId::T6_SC: return "a, b, c all even";
    case TheoremId::T7_CSSC: return "all alpha, sign conjectured";
    case TheoremId::CONJ_SC_ODD:
      return "a even, b and c odd; six product cases and a zero case mod 4";
  }
  return "?";
}

BigInt thm1_tcpp(long a, long b) {
  require_positive(a);
  require(b >= 0, ErrorKind::InvalidInput, "b must be nonnegative");
  if (a % 2 == 0 && b % 2 == 1) return 0;
  Rational p(1);
  for (long j = 1; j <= (a + 1) / 2 - 1; ++j)
    p *= Rational(b / 2 + j) * rising(Rational(a - j), b) / rising(Rational(j), b + 1);
  return as_integer(p, "transpose-complementary product");
}

BigInt thm2_stcpp(long alpha, long b) {
  require_positive(alpha);
  require(b >= 0, ErrorKind::InvalidInput, "b must be nonnegative");
  if (b % 2 == 1) return 0;
  const long len = alpha % 2 == 0 ? alpha - 1 : alpha;
  Rational p(1);
  for (long k = 1; k <= alpha / 2; ++k)
    p *= rising(Rational(b + 2 * k), len) / rising(Rational(2 * k), len);
  return as_integer(p, "symmetric transpose-complementary product");
}

BigInt thm4_cstcpp(long alpha) {
  require_positive(alpha);
  if (alpha % 2 == 0) return 0;
  const Rational p = ase_product(alpha);
  return as_integer(p * p, "cyclically symmetric product");
}

BigInt thm5_tsscpp(long alpha) {
  require_positive(alpha);
  if (alpha % 2 == 0) return 0;
  return as_integer(ase_product(alpha), "totally symmetric product");
}

BigInt thm6_scpp(long a, long b, long c) {
  require(a >= 0 && b >= 0 && c >= 0, ErrorKind::InvalidInput,
          "box sides must be nonnegative");
  require(a % 2 == 0 && b % 2 == 0 && c % 2 == 0, ErrorKind::UnsupportedCase,
          "the product holds for even sides; use conj_scpp_odd for a even, "
          "b and c odd");
  return box(a / 2, b / 2, c / 2);
}

BigInt thm7_csscpp(long alpha) {
  require_positive(alpha);
  Rational p(1);
  for (long k = 0; k <= alpha - 1; ++k) p *= fact(3 * k + 1) / fact(alpha + k);
  return as_integer(p, "cyclically symmetric self-complementary product");
}

BigInt conj_scpp_odd(long a, long b, long c) {
  require(a >= 0 && b >= 0 && c >= 0, ErrorKind::InvalidInput,
          "box sides must be nonnegative");
  require(a % 2 == 0 && b % 2 == 1 && c % 2 == 1, ErrorKind::UnsupportedCase,
          "the odd-side product is stated for a even and b, c odd");
  const long am = a % 4, bm = b % 4, cm = c % 4;
  if (am == 0 && bm == 3 && cm == 3) {
    const BigInt x = box(a / 4, (b + 1) / 4, (c + 1) / 4);
    return x * x * box(a / 4, (b - 3) / 4, (c + 1) / 4) *
           box(a / 4, (b + 1) / 4, (c - 3) / 4);
  }
  if (am == 0 && bm == 1 && cm == 1) {
    const BigInt x = box(a / 4, (b - 1) / 4, (c - 1) / 4);
    return x * x * box(a / 4, (b + 3) / 4, (c - 1) / 4) *
           box(a / 4, (b - 1) / 4, (c + 3) / 4);
  }
  if (am == 2 && bm == 3 && cm == 3) {
    const BigInt x = box((a - 2) / 4, (b + 1) / 4, (c + 1) / 4);
    return x * x * box((a + 2) / 4, (b - 3) / 4, (c + 1) / 4) *
           box((a + 2) / 4, (b + 1) / 4, (c - 3) / 4);
  }
  if (am == 2 && bm == 1 && cm == 1) {
    const BigInt x = box((a + 2) / 4, (b - 1) / 4, (c - 1) / 4);
    return x * x * box((a - 2) / 4, (b + 3) / 4, (c - 1) / 4) *
           box((a - 2) / 4, (b - 1) / 4, (c + 3) / 4);
  }
  if (am == 0 && bm == 1 && cm == 3) {
    const BigInt x = box(a / 4, (b - 1) / 4, (c + 1) / 4);
    return x * x * box(a / 4, (b - 1) / 4, (c + 1) / 4) *
           box(a / 4, (b + 3) / 4, (c - 3) / 4);
  }
  if (am == 0 && bm == 3 && cm == 1) {
    const BigInt x = box(a / 4, (b + 1) / 4, (c - 1) / 4);
    return x * x * box(a / 4, (b + 1) / 4, (c - 1) / 4) *
           box(a / 4, (b - 3) / 4, (c + 3) / 4);
  }
  return 0;  // a = 2 mod 4 and b != c mod 4
}

ExactPolynomial thm3_forced_product(long alpha, int b_parity) {
  require_positive(alpha);
  require(b_parity == 0 || b_parity == 1, ErrorKind::InvalidInput,
          "b parity must be 0 or 1");
  const Rational half = make_rational(1, 2);
  ExactPolynomial p = ExactPolynomial::constant(Rational(1));
  if (alpha % 2 == 0) {
    const Rational offset = b_parity == 0 ? Rational(0) : make_rational(-1, 2);
    for (long k = 1; k <= alpha / 2; ++k)
      p = p * rising_factorial_poly(half, offset + k, alpha / 2 + 1);
    p = p * (b_parity == 0 ? ExactPolynomial::linear(Rational(1), Rational(2 * alpha + 2))
                           : ExactPolynomial::linear(Rational(1), Rational(-1)));
  } else {
    for (long i = 1; i <= (alpha + 1) / 2; ++i) {
      const Rational shift = b_parity == 0
                                 ? make_rational(alpha - 1, 2) - i + 2
                                 : make_rational(alpha, 2) - i + 1;
      p = p * rising_factorial_poly(half, shift, 2 * i - 1);
    }
  }
  return p;
}

int thm3_claimed_degree(long alpha) {
  require_positive(alpha);
  return alpha % 2 == 0 ? static_cast<int>((alpha / 2) * (alpha / 2))
                        : static_cast<int>((alpha * alpha - 1) / 4);
}

int thm3_default_samples(long alpha) {
  return thm3_forced_product(alpha, 0).degree() + thm3_claimed_degree(alpha) + 6;
}

Thm3Report thm3_structure_check(long alpha, int b_parity, int nsamples) {
  require(nsamples >= 3, ErrorKind::NeedsMoreSamples,
          "at least three samples are needed to interpolate and confirm");
  Thm3Report r;
  r.alpha = alpha;
  r.b_parity = b_parity;
  r.forced_product = thm3_forced_product(alpha, b_parity);
  for (int k = 0; k < nsamples; ++k) r.samples.push_back(b_parity + 2L * k);
  const auto value = [alpha](long b) {
    return Rational(stcpp_enum_odd_a(alpha, b).value);
  };
  r.pfaffian_poly = fit_polynomial(value, b_parity, 2, nsamples - 3, 2);
  auto [q, rem] = divmod(r.pfaffian_poly, r.forced_product);
  r.quotient = q;
  r.divisible = rem.is_zero();
  r.claimed_degree = thm3_claimed_degree(alpha);
  r.observed_degree = q.degree();
  return r;
}

IdentitySides lemma_detl(const std::vector<Rational>& x,
                         const std::vector<Rational>& a,
                         const std::vector<Rational>& b) {
  const std::size_t n = x.size();
  require(n >= 1, ErrorKind::InvalidInput, "n must be positive");
  require(a.size() + 1 == n && b.size() + 1 == n, ErrorKind::Dimension,
          "A and B must hold entries 2..n");
  // A_k is a[k-2], B_k is b[k-2].
  ExactMatrix m(n, n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      Rational e(1);
      for (std::size_t k = i + 1; k <= n; ++k) e *= x[j - 1] + a[k - 2];
      for (std::size_t k = 2; k <= i; ++k) e *= x[j - 1] + b[k - 2];
      m(i - 1, j - 1) = e;
    }
  Rational rhs(1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) rhs *= x[i] - x[j];
  for (std::size_t i = 2; i <= n; ++i)
    for (std::size_t j = i; j <= n; ++j) rhs *= b[i - 2] - a[j - 2];
  return {det(m), rhs};
}

bool lemma_detl_check(const std::vector<Rational>& x,
                      const std::vector<Rational>& a,
                      const std::vector<Rational>& b) {
  return lemma_detl(x, a, b).holds();
}

Lemma2jiResult lemma_2ji(long alpha, long beta, int gamma) {
  require(alpha >= 1, ErrorKind::InvalidInput, "alpha must be positive");
  require(gamma == 0 || gamma == 1, ErrorKind::InvalidInput,
          "gamma must be 0 or 1");
  Rational p(1);
  for (long j = 1; j <= alpha; ++j)
    p *= fact(beta + j) * fact(j - 1) * rising(Rational(2 * beta + gamma + j + 1), j - 1) /
         (fact(2 * j - 1 - gamma) * fact(beta + gamma + j - 1));
  IntMatrix m(static_cast<std::size_t>(alpha), static_cast<std::size_t>(alpha));
  for (long i = 1; i <= alpha; ++i)
    for (long j = 1; j <= alpha; ++j)
      m(i - 1, j - 1) = binom(beta + j, 2 * j - i - gamma);
  Lemma2jiResult r{as_integer(p, "determinant product"), det(m)};
  require(r.product == r.determinant, ErrorKind::InternalConsistency,
          "det C(beta+j, 2j-i-gamma) = " + to_decimal(r.determinant) +
              " but the product gives " + to_decimal(r.product));
  return r;
}

BigInt lemma_M1(long alpha, long b) {
  require(alpha >= 1 && b >= 0, ErrorKind::InvalidInput,
          "alpha must be positive and b nonnegative");
  require(alpha % 2 == 0, ErrorKind::UnsupportedCase,
          "the squared product is stated for even alpha");
  BigInt value(0);
  if (b % 2 == 0) {
    Rational p(1);
    for (long k = 1; k <= alpha / 2; ++k)
      p *= rising(Rational(b + 2 * k), alpha - 1) / rising(Rational(2 * k), alpha - 1);
    value = as_integer(p * p, "squared product");
  }
  const Rational d = det(stcpp_even_matrix(alpha, b).matrix);
  require(d == Rational(value), ErrorKind::InternalConsistency,
          "det M = " + to_decimal(d) + " but the closed form gives " +
              to_decimal(value));
  return value;
}

IdentitySides mrr_sides(const Rational& mu, long n) {
  require(n >= 1, ErrorKind::InvalidInput, "n must be positive");
  ExactMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) m(i, j) = binom_poly(mu + i + j, 2 * i - j);
  Rational rhs = n % 4 == 3 ? Rational(-1) : Rational(1);
  const long n1 = n - 1;
  rhs *= Rational(BigInt(1) << static_cast<mp_bitcnt_t>(n1 * (n1 - 1) / 2));
  for (long i = 1; i <= n - 1; ++i)
    rhs *= rising(mu + i + 1, (i + 1) / 2) *
           rising(-mu - 3 * n + i + make_rational(3, 2), i / 2) /
           rising(Rational(i), i);
  return {det(m), rhs};
}

Rational mrr_det(const Rational& mu, long n) {
  const IdentitySides s = mrr_sides(mu, n);
  require(s.holds(), ErrorKind::InternalConsistency,
          "det C(mu+i+j, 2i-j) = " + to_decimal(s.lhs) +
              " but the closed form gives " + to_decimal(s.rhs));
  return s.lhs;
}

}  // namespace ppsign
