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

#ifndef PPSIGN_EXACTALG_HPP
#define PPSIGN_EXACTALG_HPP

#include <cstdint>

#include "ppsign/matrix.hpp"
#include "ppsign/number.hpp"
#include "ppsign/polynomial.hpp"

namespace ppsign {

inline constexpr std::uint64_t kDefaultSubsetBudget = 5'000'000;

/// Fraction-free (Bareiss) determinant. Every intermediate division is
/// checked to be exact.
BigInt det(const IntMatrix& m);

/// Rational determinant: rows are scaled to integers, then Bareiss.
Rational det(const ExactMatrix& m);

/// Pfaffian, dispatching to the matching sum for size <= 8 and to
/// elimination above that.
Rational pfaffian(const SkewMatrix& m);

/// Signed sum over perfect matchings, straight from the definition.
Rational pfaffian_by_matchings(const SkewMatrix& m);

/// Skew-symmetric elimination (simultaneous row/column operations) with pair
/// swaps for zero pivots.
Rational pfaffian_by_elimination(const SkewMatrix& m);

/// Sum of det(T restricted to rows k_1<...<k_n) over all n-subsets of the p
/// rows of the p x n matrix `t`. Parallel over subsets.
Rational sum_of_minors(const ExactMatrix& t,
                       std::uint64_t subset_budget = kDefaultSubsetBudget);

/// Serial reference for sum_of_minors.
Rational sum_of_minors_serial(const ExactMatrix& t,
                              std::uint64_t subset_budget = kDefaultSubsetBudget);

/// sum over n-subsets K of Pf(A[K,K]) * det(T[K,:]); the left side of the
/// general minor-summation formula. n = t.cols() must be even.
Rational sum_of_pfaffian_weighted_minors(
    const ExactMatrix& t, const SkewMatrix& a,
    std::uint64_t subset_budget = kDefaultSubsetBudget);

/// n x n skew matrix with a(k,l) = sgn(l - k).
SkewMatrix sign_skew_matrix(std::size_t n);

/// tT * A * T as a skew matrix.
SkewMatrix congruence(const ExactMatrix& t, const SkewMatrix& a);

}  // namespace ppsign

#endif  // PPSIGN_EXACTALG_HPP
