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

#ifndef PPSIGN_FORMULAS_HPP
#define PPSIGN_FORMULAS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "ppsign/number.hpp"
#include "ppsign/polynomial.hpp"

namespace ppsign {

enum class TheoremId {
  T1_TC,
  T2_STC,
  T3_STC_ODD_SHAPE,
  T4_CSTC,
  T5_TSSC,
  T6_SC,
  T7_CSSC,
  CONJ_SC_ODD,
};

std::string_view to_string(TheoremId id);
/// Parameter names, e.g. "a, b" or "alpha".
std::string_view parameter_signature(TheoremId id);
/// Human-readable parity case table.
std::string_view case_table(TheoremId id);

/// Transpose-complementary, box a x a x 2b.
BigInt thm1_tcpp(long a, long b);

/// Symmetric transpose-complementary, box 2 alpha x 2 alpha x 2b.
BigInt thm2_stcpp(long alpha, long b);

/// Cyclically symmetric transpose-complementary, box (2 alpha)^3.
BigInt thm4_cstcpp(long alpha);

/// Totally symmetric self-complementary, box (2 alpha)^3.
BigInt thm5_tsscpp(long alpha);

/// Self-complementary, all sides even: B(a/2, b/2, c/2).
BigInt thm6_scpp(long a, long b, long c);

inline constexpr std::string_view kThm7SignConvention = "conjectured +1";

/// Cyclically symmetric self-complementary, box (2 alpha)^3: the absolute
/// value prod_{k=0}^{alpha-1} (3k+1)!/(alpha+k)!. The sign is only
/// conjectured, see kThm7SignConvention.
BigInt thm7_csscpp(long alpha);

/// Self-complementary with a even and b, c odd: the conjectured absolute
/// value, dispatched on (a mod 4, b mod 4, c mod 4).
BigInt conj_scpp_odd(long a, long b, long c);

/// Box (2 alpha + 1)^2 x 2b: the signed values sampled at b of one parity,
/// interpolated, and divided by the forced product for that case.
struct Thm3Report {
  long alpha = 0;
  int b_parity = 0;
  std::vector<long> samples;
  ExactPolynomial pfaffian_poly;
  ExactPolynomial forced_product;
  ExactPolynomial quotient;
  bool divisible = false;
  int claimed_degree = 0;
  int observed_degree = 0;
  bool degree_matches() const { return claimed_degree == observed_degree; }
  bool holds() const { return divisible && degree_matches(); }
};

/// The forced product of the (alpha, b parity) case as a polynomial in b.
ExactPolynomial thm3_forced_product(long alpha, int b_parity);

/// (alpha/2)^2 for alpha even, (alpha^2-1)/4 for alpha odd.
int thm3_claimed_degree(long alpha);

/// nsamples values of b are used; all but two fix the interpolant and the
/// last two confirm it. Throws NeedsMoreSamples when they disagree.
Thm3Report thm3_structure_check(long alpha, int b_parity, int nsamples);

/// Default sample count: enough for the claimed degree plus slack.
int thm3_default_samples(long alpha);

struct IdentitySides {
  Rational lhs;
  Rational rhs;
  bool holds() const { return lhs == rhs; }
};

/// det (X_j+A_n)...(X_j+A_{i+1})(X_j+B_i)...(X_j+B_2) against
/// prod_{i<j} (X_i - X_j) prod_{2<=i<=j<=n} (B_i - A_j).
/// `a` and `b` hold A_2..A_n and B_2..B_n.
IdentitySides lemma_detl(const std::vector<Rational>& x,
                         const std::vector<Rational>& a,
                         const std::vector<Rational>& b);
bool lemma_detl_check(const std::vector<Rational>& x,
                      const std::vector<Rational>& a,
                      const std::vector<Rational>& b);

/// det_{1<=i,j<=alpha} C(beta+j, 2j-i-gamma) and its product evaluation.
/// Throws Domain for a negative factorial argument and InternalConsistency
/// if the two sides differ.
struct Lemma2jiResult {
  BigInt product;
  BigInt determinant;
};
Lemma2jiResult lemma_2ji(long alpha, long beta, int gamma);

/// det of the alpha x alpha double-sum matrix for even alpha, as a closed
/// form; cross-checked against the matrix itself.
BigInt lemma_M1(long alpha, long b);

/// det_{0<=i,j<=n-1} C(mu+i+j, 2i-j) against its closed product.
IdentitySides mrr_sides(const Rational& mu, long n);
/// Asserted version: returns the common value.
Rational mrr_det(const Rational& mu, long n);

}  // namespace ppsign

#endif  // PPSIGN_FORMULAS_HPP
