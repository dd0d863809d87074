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

#ifndef PPSIGN_LGV_HPP
#define PPSIGN_LGV_HPP

#include <string>
#include <vector>

#include "ppsign/exactalg.hpp"
#include "ppsign/matrix.hpp"
#include "ppsign/number.hpp"
#include "ppsign/polynomial.hpp"
#include "ppsign/signed_count.hpp"

namespace ppsign {

struct Point {
  long x = 0;
  long y = 0;
};

/// Step weight of a south/east lattice path.
///   Area2:      (-1)^(area between the path and the x-axis)
///   IndexArea1: (-1)^(i + area above the lowest point), i = 1-based start index
enum class PathWeight { Area2, IndexArea1 };

/// Signed count of south/east paths from `start` to `end` under (-1)^area2,
/// by the Gaussian binomial at q = -1 with the area2 correction. Zero when
/// `end` is not weakly south-east of `start`.
BigInt path_count_signed(const Point& start, const Point& end);

struct PathSystem {
  std::vector<Point> starts;
  std::vector<Point> ends;
  /// Starts are chosen from a pool (minor summation) rather than fixed.
  bool free_starts = false;
  PathWeight weight = PathWeight::Area2;
};

/// Entry (i, j) is the weighted count of paths from starts[i] to ends[j].
IntMatrix path_matrix(const PathSystem& system);

PathSystem tcpp_paths(long a, long b);
/// a = 2 alpha; alpha of the alpha + b pool points are used.
PathSystem stcpp_even_paths(long alpha, long b);
/// a = 2 alpha + 1.
PathSystem stcpp_odd_paths(long alpha, long b);

/// A class matrix with the sign that turns its determinant (or Pfaffian)
/// into the signed enumeration.
struct ClassMatrix {
  ExactMatrix matrix;
  bool pfaffian = false;
  int global_sign = 1;
  std::string provenance;
};

/// global_sign * det (or Pf) of the matrix.
Rational evaluate(const ClassMatrix& m);

// Transpose-complementary, box a x a x 2b.
ClassMatrix tcpp_matrix(long a, long b);
SignedCount tcpp_enum(long a, long b);

// Symmetric transpose-complementary, box 2 alpha x 2 alpha x 2b. For odd
// alpha a dummy path is appended. The global sign comes from b = 0.
ClassMatrix stcpp_even_matrix(long alpha, long b);
SignedCount stcpp_enum_even_a(long alpha, long b);

/// The alpha/2 x alpha/2 matrix with entries
/// sum_{k=1}^{(alpha+b)/2} C(k+j-2, 2j-2) C(k+i-2, 2i-2). alpha, b even.
ExactMatrix stcpp_Mtilde(long alpha, long b);

// Symmetric transpose-complementary, box (2 alpha+1)^2 x 2b. The raw
// matrix is M (alpha even, b odd), M~ (alpha even, b even), M' (alpha odd,
// b even) or M'' (alpha odd, b odd), all from the literal double sum.
ClassMatrix stcpp_odd_a_matrix(long alpha, long b);
SignedCount stcpp_enum_odd_a(long alpha, long b);

/// Dispatches on the parity of a; box a x a x 2b.
SignedCount stcpp_enum(long a, long b);

/// Closed forms for the odd-side entries, compared with the double sums.
/// alpha even, b odd: M_{2i,2j}.
bool check_thala(long alpha, long b);
/// alpha odd: the border row/column of M' (b even) or M'' (b odd), and for
/// b even the odd-odd entries M'_{2i-1,2j-1}.
bool check_odd_border(long alpha, long b);
/// b -> -b-2alpha-1 turns the even-b entry polynomials into (-1)^{i+j} times
/// the odd-b ones.
bool check_substitution(long alpha);
/// alpha even, b = 1: the sum of maximal minors of G equals det of G with
/// the column (1,-1,...,-1,1) appended, and both vanish.
bool check_b1_appended_column(long alpha);
/// alpha even, b even: M_{2i,2j} = 0 and det M = (det M~)^2.
bool check_even_zero_pattern(long alpha, long b);

/// (j+i-1) M~_{ij} + 2(2j+2i-1) M~_{i+1,j} against the closed product, with
/// m = (alpha+b)/2.
bool check_s4_recurrence(long alpha, long b, long i, long j);
/// The Step-2 combination of M~ entries in column j, interpolated in b, is
/// divisible by ((alpha+b)/2 - t + 1/2)_{2t}.
bool check_step2_divisibility(long alpha, long t, long j);

// Cyclically symmetric transpose-complementary, box (2 alpha)^3.
ClassMatrix cstcpp_matrix(long alpha);
SignedCount cstcpp_enum(long alpha);

// Totally symmetric self-complementary, box (2 alpha)^3.
ClassMatrix tsscpp_matrix(long alpha);
SignedCount tsscpp_enum(long alpha);

// Self-complementary with all sides even; b and c are swapped so b <= c.
ClassMatrix scpp_matrix(long a, long b, long c);
SignedCount scpp_enum(long a, long b, long c);

struct MinorSummation {
  Rational direct;
  Rational pfaffian;
};

/// Both sides of the minor-summation formula for a p x n matrix T with n
/// even and a p x p skew matrix A.
MinorSummation minor_summation(const ExactMatrix& t, const SkewMatrix& a,
                               std::uint64_t subset_budget = kDefaultSubsetBudget);

}  // namespace ppsign

#endif  // PPSIGN_LGV_HPP
