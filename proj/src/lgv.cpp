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

#include "ppsign/lgv.hpp"

#include <functional>
#include <string>

#include "ppsign/error.hpp"
#include "ppsign/qseries.hpp"

namespace ppsign {

namespace {

Rational qb(long n, long k) { return Rational(qbinom_minus1(n, k)); }

Rational bin(long n, long k) { return Rational(binom(n, k)); }

int sign_of_value(const Rational& v) {
  require(v != 0, ErrorKind::InternalConsistency,
          "normalising value at b = 0 vanishes");
  return sgn(v) > 0 ? 1 : -1;
}

// sum_r sum_l G_{l,i} G_{r,j} sgn(r - l), written out as a double sum.
ExactMatrix double_sum(const ExactMatrix& g) {
  const std::size_t p = g.rows(), n = g.cols();
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational s(0);
      for (std::size_t r = 0; r < p; ++r)
        for (std::size_t l = 0; l < p; ++l) {
          if (r == l) continue;
          const Rational t = g(l, i) * g(r, j);
          if (r > l)
            s += t;
          else
            s -= t;
        }
      m(i, j) = s;
    }
  return m;
}

// Appends the isolated point A_{p+1} = E_{n+1} with a unit connection.
ExactMatrix with_dummy_path(const ExactMatrix& g) {
  ExactMatrix out(g.rows() + 1, g.cols() + 1);
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) out(i, j) = g(i, j);
  out(g.rows(), g.cols()) = 1;
  return out;
}

ExactMatrix stcpp_even_g(long alpha, long b) {
  ExactMatrix g(static_cast<std::size_t>(alpha + b),
                static_cast<std::size_t>(alpha));
  for (long i = 1; i <= alpha + b; ++i)
    for (long j = 1; j <= alpha; ++j)
      g(i - 1, j - 1) = minus_one_pow(i) * qb(i + j - 2, 2 * j - 2);
  return alpha % 2 == 1 ? with_dummy_path(g) : g;
}

ExactMatrix stcpp_odd_g(long alpha, long b, bool dummy) {
  ExactMatrix g(static_cast<std::size_t>(alpha + b),
                static_cast<std::size_t>(alpha));
  for (long i = 1; i <= alpha + b; ++i)
    for (long j = 1; j <= alpha; ++j)
      g(i - 1, j - 1) = minus_one_pow(i) * qb(i + j - 1, 2 * j - 1);
  return dummy ? with_dummy_path(g) : g;
}

ExactMatrix stcpp_odd_raw(long alpha, long b) {
  return double_sum(stcpp_odd_g(alpha, b, alpha % 2 == 1));
}

Rational mtilde_entry(long m, long i, long j) {
  Rational s(0);
  for (long k = 1; k <= m; ++k) s += bin(k + j - 2, 2 * j - 2) * bin(k + i - 2, 2 * i - 2);
  return s;
}

void check_nonneg(long v, const char* what) {
  require(v >= 0, ErrorKind::InvalidInput,
          std::string(what) + " must be nonnegative, got " + std::to_string(v));
}

SignedCount make_count(const Rational& v, const char* method,
                       SymmetryClass cls, BoxDims box, std::string convention) {
  require(is_integer(v), ErrorKind::InternalConsistency,
          std::string(method) + " produced a non-integer " + to_decimal(v));
  return SignedCount{v.get_num(), method, cls, box, std::move(convention)};
}

BoxDims cube(long alpha) {
  const int s = static_cast<int>(2 * alpha);
  return BoxDims{s, s, s};
}

}  // namespace

BigInt path_count_signed(const Point& start, const Point& end) {
  const long east = end.x - start.x;
  const long south = start.y - end.y;
  if (east < 0 || south < 0) return BigInt(0);
  return minus_one_pow(east * end.y) * qbinom_minus1(east + south, east);
}

IntMatrix path_matrix(const PathSystem& system) {
  IntMatrix m(system.starts.size(), system.ends.size());
  for (std::size_t i = 0; i < system.starts.size(); ++i)
    for (std::size_t j = 0; j < system.ends.size(); ++j) {
      const Point& s = system.starts[i];
      const Point& e = system.ends[j];
      if (system.weight == PathWeight::Area2) {
        m(i, j) = path_count_signed(s, e);
      } else {
        const long east = e.x - s.x, south = s.y - e.y;
        m(i, j) = (east < 0 || south < 0)
                      ? BigInt(0)
                      : minus_one_pow(static_cast<long long>(i) + 1) *
                            qbinom_minus1(east + south, east);
      }
    }
  return m;
}

PathSystem tcpp_paths(long a, long b) {
  PathSystem s;
  for (long i = 1; i <= a; ++i) s.starts.push_back({i - 1, b + i - 1});
  for (long j = 1; j <= a; ++j) s.ends.push_back({2 * j - 2, j - 1});
  s.weight = PathWeight::Area2;
  return s;
}

PathSystem stcpp_even_paths(long alpha, long b) {
  PathSystem s;
  for (long i = 1; i <= alpha + b; ++i) s.starts.push_back({0, i - 1});
  for (long j = 1; j <= alpha; ++j) s.ends.push_back({2 * j - 2, j - 1});
  s.free_starts = true;
  s.weight = PathWeight::IndexArea1;
  return s;
}

PathSystem stcpp_odd_paths(long alpha, long b) {
  PathSystem s;
  for (long i = 1; i <= alpha + b; ++i) s.starts.push_back({0, i - 1});
  for (long j = 1; j <= alpha; ++j) s.ends.push_back({2 * j - 1, j - 1});
  s.free_starts = true;
  s.weight = PathWeight::IndexArea1;
  return s;
}

Rational evaluate(const ClassMatrix& m) {
  const Rational v = m.pfaffian ? pfaffian(SkewMatrix(m.matrix)) : det(m.matrix);
  return m.global_sign * v;
}

ClassMatrix tcpp_matrix(long a, long b) {
  check_nonneg(a, "a");
  check_nonneg(b, "b");
  ClassMatrix cm;
  cm.matrix = ExactMatrix(static_cast<std::size_t>(a), static_cast<std::size_t>(a));
  for (long i = 1; i <= a; ++i)
    for (long j = 1; j <= a; ++j)
      cm.matrix(i - 1, j - 1) =
          minus_one_pow((i - 1) * (j - 1)) * qb(b + j - 1, 2 * j - i - 1);
  cm.global_sign = minus_one_pow(a * (a - 1) / 2);
  cm.provenance = "M_ij = (-1)^((i-1)(j-1)) [b+j-1, 2j-i-1]_{-1}";
  return cm;
}

SignedCount tcpp_enum(long a, long b) {
  const BoxDims box{static_cast<int>(a), static_cast<int>(a), static_cast<int>(2 * b)};
  return make_count(evaluate(tcpp_matrix(a, b)), "lgv-determinant",
                    SymmetryClass::TC, box, "area above the mid-plane");
}

namespace {

ClassMatrix stcpp_even_unsigned(long alpha, long b) {
  ClassMatrix cm;
  cm.matrix = double_sum(stcpp_even_g(alpha, b));
  cm.pfaffian = true;
  cm.provenance = alpha % 2 == 0
                      ? "Pf of sum_{r,l} G_li G_rj sgn(r-l)"
                      : "Pf of sum_{r,l} G_li G_rj sgn(r-l), dummy path appended";
  return cm;
}

ClassMatrix stcpp_odd_unsigned(long alpha, long b) {
  ClassMatrix cm;
  cm.matrix = stcpp_odd_raw(alpha, b);
  cm.pfaffian = true;
  const bool even_b = b % 2 == 0;
  if (alpha % 2 == 0)
    cm.provenance = even_b ? "M~ (alpha even, b even)" : "M (alpha even, b odd)";
  else
    cm.provenance = even_b ? "M' (alpha odd, b even)" : "M'' (alpha odd, b odd)";
  return cm;
}

}  // namespace

ClassMatrix stcpp_even_matrix(long alpha, long b) {
  check_nonneg(alpha, "alpha");
  check_nonneg(b, "b");
  ClassMatrix cm = stcpp_even_unsigned(alpha, b);
  cm.global_sign = sign_of_value(evaluate(stcpp_even_unsigned(alpha, 0)));
  return cm;
}

SignedCount stcpp_enum_even_a(long alpha, long b) {
  const BoxDims box{static_cast<int>(2 * alpha), static_cast<int>(2 * alpha),
                    static_cast<int>(2 * b)};
  return make_count(evaluate(stcpp_even_matrix(alpha, b)), "lgv-pfaffian",
                    SymmetryClass::STC, box,
                    "upper right quarter; sign fixed by b = 0");
}

ExactMatrix stcpp_Mtilde(long alpha, long b) {
  require(alpha % 2 == 0 && b % 2 == 0 && alpha >= 0 && b >= 0,
          ErrorKind::UnsupportedCase, "M~ needs alpha and b even");
  const long n = alpha / 2, m = (alpha + b) / 2;
  ExactMatrix t(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (long i = 1; i <= n; ++i)
    for (long j = 1; j <= n; ++j) t(i - 1, j - 1) = mtilde_entry(m, i, j);
  return t;
}

ClassMatrix stcpp_odd_a_matrix(long alpha, long b) {
  check_nonneg(alpha, "alpha");
  check_nonneg(b, "b");
  ClassMatrix cm = stcpp_odd_unsigned(alpha, b);
  cm.global_sign = sign_of_value(evaluate(stcpp_odd_unsigned(alpha, 0)));
  return cm;
}

SignedCount stcpp_enum_odd_a(long alpha, long b) {
  const BoxDims box{static_cast<int>(2 * alpha + 1), static_cast<int>(2 * alpha + 1),
                    static_cast<int>(2 * b)};
  return make_count(evaluate(stcpp_odd_a_matrix(alpha, b)), "lgv-pfaffian",
                    SymmetryClass::STC, box,
                    "upper right quarter; sign fixed by b = 0");
}

SignedCount stcpp_enum(long a, long b) {
  return a % 2 == 0 ? stcpp_enum_even_a(a / 2, b)
                    : stcpp_enum_odd_a((a - 1) / 2, b);
}

bool check_thala(long alpha, long b) {
  require(alpha % 2 == 0 && b % 2 == 1, ErrorKind::UnsupportedCase,
          "closed form for M_{2i,2j} needs alpha even and b odd");
  const ExactMatrix m = stcpp_odd_raw(alpha, b);
  const long h = (alpha + b - 1) / 2;
  for (long i = 1; i <= alpha / 2; ++i)
    for (long j = 1; j <= alpha / 2; ++j) {
      const Rational v = bin(h + j, 2 * j) * bin(h + i, 2 * i) * make_rational(j - i, j + i);
      if (m(2 * i - 1, 2 * j - 1) != v) return false;
    }
  return true;
}

bool check_odd_border(long alpha, long b) {
  require(alpha % 2 == 1, ErrorKind::UnsupportedCase,
          "border closed forms need alpha odd");
  const ExactMatrix m = stcpp_odd_raw(alpha, b);
  const long last = alpha;  // 0-based index of row alpha+1
  for (long j = 1; j <= alpha; ++j) {
    const BigInt c = b % 2 == 0 ? binom((alpha + b + 1) / 2 + (j - 1) / 2, j)
                                : binom((alpha + b) / 2 + j / 2, j);
    const Rational row = -minus_one_pow(j) * Rational(c);
    if (m(last, j - 1) != row || m(j - 1, last) != -row) return false;
  }
  if (b % 2 == 0) {
    const long h = (alpha + b - 1) / 2;
    for (long i = 1; 2 * i - 1 <= alpha; ++i)
      for (long j = 1; 2 * j - 1 <= alpha; ++j) {
        const Rational v = bin(h + j, 2 * j - 1) * bin(h + i, 2 * i - 1) *
                           make_rational(j - i, i + j - 1);
        if (m(2 * i - 2, 2 * j - 2) != v) return false;
      }
  }
  return true;
}

bool check_substitution(long alpha) {
  require(alpha >= 1, ErrorKind::InvalidInput, "alpha must be positive");
  const std::size_t n = static_cast<std::size_t>(alpha % 2 == 0 ? alpha : alpha + 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const int bound = static_cast<int>(i + j) + 4;
      const auto entry = [&](long b) { return stcpp_odd_raw(alpha, b)(i, j); };
      const ExactPolynomial even_b = fit_polynomial(entry, 0, 2, bound);
      const ExactPolynomial odd_b = fit_polynomial(entry, 1, 2, bound);
      const ExactPolynomial moved =
          even_b.substitute_linear(Rational(-1), Rational(-2 * alpha - 1));
      const int s = minus_one_pow(static_cast<long long>(i + j));
      if (!(moved == Rational(s) * odd_b)) return false;
    }
  return true;
}

bool check_b1_appended_column(long alpha) {
  require(alpha % 2 == 0 && alpha >= 2, ErrorKind::UnsupportedCase,
          "appended-column check needs alpha even and positive");
  const ExactMatrix g = stcpp_odd_g(alpha, 1, false);
  ExactMatrix gt(g.rows(), g.cols() + 1);
  for (std::size_t r = 0; r < g.rows(); ++r) {
    for (std::size_t c = 0; c < g.cols(); ++c) gt(r, c) = g(r, c);
    gt(r, g.cols()) = minus_one_pow(static_cast<long long>(r));
  }
  const Rational d = det(gt);
  return d == sum_of_minors_serial(g) && d == 0;
}

bool check_even_zero_pattern(long alpha, long b) {
  require(alpha % 2 == 0 && b % 2 == 0, ErrorKind::UnsupportedCase,
          "zero pattern needs alpha and b even");
  const ExactMatrix m = stcpp_even_unsigned(alpha, b).matrix;
  const ExactMatrix t = stcpp_Mtilde(alpha, b);
  for (long i = 1; i <= alpha / 2; ++i)
    for (long j = 1; j <= alpha / 2; ++j) {
      if (m(2 * i - 1, 2 * j - 1) != 0) return false;
      if (m(2 * i - 1, 2 * j - 2) != t(i - 1, j - 1)) return false;
    }
  const Rational dt = det(t);
  return det(m) == dt * dt;
}

bool check_s4_recurrence(long alpha, long b, long i, long j) {
  require((alpha + b) % 2 == 0, ErrorKind::UnsupportedCase,
          "recurrence needs alpha + b even");
  const long m = (alpha + b) / 2;
  const Rational lhs = Rational(j + i - 1) * mtilde_entry(m, i, j) +
                       Rational(2 * (2 * j + 2 * i - 1)) * mtilde_entry(m, i + 1, j);
  const Rational rhs = Rational(alpha + b) *
                       shifted_factorial(Rational(m - i + 1), 2 * i - 1) *
                       shifted_factorial(Rational(m - j + 1), 2 * j - 1) /
                       Rational(factorial(2 * i) * factorial(2 * j - 2));
  return lhs == rhs;
}

bool check_step2_divisibility(long alpha, long t, long j) {
  require(alpha % 2 == 0 && t >= 1 && j >= 1, ErrorKind::UnsupportedCase,
          "Step-2 combination needs alpha even, t >= 1 and j >= 1");
  const auto combo = [&](long b) {
    const long m = (alpha + b) / 2;
    Rational v = mtilde_entry(m, t + 1, j);
    for (long s = 1; s <= t; ++s) {
      Rational coeff = bin(2 * s - 1, s) /
                       (Rational(2 * s - 1) * Rational(BigInt(1) << static_cast<mp_bitcnt_t>(4 * s - 1)));
      if (s % 2 == 0) coeff = -coeff;
      v += coeff * mtilde_entry(m, t + 1 - s, j);
    }
    return v;
  };
  const ExactPolynomial value = fit_polynomial(combo, 0, 2, static_cast<int>(2 * (t + j) + 2));
  const ExactPolynomial divisor = rising_factorial_poly(
      make_rational(1, 2), Rational(alpha - 2 * t + 1, 2), 2 * t);
  return divides(divisor, value);
}

ClassMatrix cstcpp_matrix(long alpha) {
  require(alpha >= 1, ErrorKind::InvalidInput, "alpha must be positive");
  const long n = alpha - 1;
  ClassMatrix cm;
  cm.matrix = ExactMatrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (long i = 1; i <= n; ++i)
    for (long j = 1; j <= n; ++j)
      cm.matrix(i - 1, j - 1) = minus_one_pow(j * (2 * j - i)) * qb(i + j, 2 * j - i);
  long squares = 0;
  for (long k = 1; k <= n; ++k) squares += k * k;
  cm.global_sign = minus_one_pow(squares);
  cm.provenance = "det (-1)^(j(2j-i)) [i+j, 2j-i]_{-1}";
  return cm;
}

SignedCount cstcpp_enum(long alpha) {
  const Rational v = evaluate(cstcpp_matrix(alpha));
  Rational reduced(0);
  if (alpha % 2 == 1) {
    const long n = (alpha - 1) / 2;
    ExactMatrix r(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (long i = 1; i <= n; ++i)
      for (long j = 1; j <= n; ++j) r(i - 1, j - 1) = bin(i + j - 1, 2 * j - i);
    const Rational d = det(r);
    reduced = d * d;
  }
  require(v == reduced, ErrorKind::InternalConsistency,
          "cyclically symmetric TC determinant " + to_decimal(v) +
              " disagrees with its squared reduction " + to_decimal(reduced));
  return make_count(v, "lgv-determinant", SymmetryClass::CSTC, cube(alpha),
                    "upper right eighth {i<=alpha, j>alpha, k>alpha}");
}

ClassMatrix tsscpp_matrix(long alpha) {
  require(alpha >= 1, ErrorKind::InvalidInput, "alpha must be positive");
  const bool odd = alpha % 2 == 1;
  // For even alpha the index 0 is added on both sides so that the number of
  // paths is even; its column vanishes.
  const long i0 = odd ? 1 : 0, j0 = odd ? 1 : 0;
  const long rows = 2 * alpha - 2 - i0 + 1, cols = alpha - 1 - j0 + 1;
  ExactMatrix t(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  for (long i = i0; i <= 2 * alpha - 2; ++i)
    for (long j = j0; j <= alpha - 1; ++j)
      t(i - i0, j - j0) = qb(j, i - j) * minus_one_pow(j * (2 * j - i)) *
                          minus_one_pow(i * (i + 1) / 2);
  ClassMatrix cm;
  cm.matrix = congruence(t, sign_skew_matrix(t.rows())).matrix();
  cm.pfaffian = true;
  cm.global_sign = odd ? minus_one_pow((alpha - 1) / 2) : 1;
  cm.provenance = "Pf(tT A T), T_ij = [j, i-j]_{-1} (-1)^(j(2j-i)) (-1)^(i(i+1)/2)";
  return cm;
}

SignedCount tsscpp_enum(long alpha) {
  const Rational v = evaluate(tsscpp_matrix(alpha));
  Rational reduced(0);
  if (alpha % 2 == 1) {
    const long n = (alpha - 1) / 2;
    ExactMatrix r(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (long i = 1; i <= n; ++i)
      for (long j = 1; j <= n; ++j) r(i - 1, j - 1) = bin(i + j - 1, 2 * j - i - 1);
    reduced = det(r);
  }
  require(abs(v) == abs(reduced), ErrorKind::InternalConsistency,
          "totally symmetric SC Pfaffian " + to_decimal(v) +
              " disagrees with the reduced determinant " + to_decimal(reduced));
  return make_count(v, "lgv-pfaffian", SymmetryClass::TSSC, cube(alpha),
                    "global sign (-1)^((alpha-1)/2) against the majority reference");
}

ClassMatrix scpp_matrix(long a, long b, long c) {
  if (a < 0 || b < 0 || c < 0 || a % 2 || b % 2 || c % 2)
    fail(ErrorKind::UnsupportedCase,
         "the Pfaffian pipeline needs all sides even; use the conjecture "
         "evaluator for odd sides");
  if (b > c) std::swap(b, c);
  const long x = (c - b) / 2, half = (a + b) / 2, width = a + b;
  ExactMatrix s(static_cast<std::size_t>(a), static_cast<std::size_t>(width));
  for (long i = 1; i <= a; ++i)
    for (long j = 1; j <= width; ++j) {
      Rational v = minus_one_pow((x + j - i) * (j - 1)) * qb(b + x, x + j - i);
      if (j <= half) v *= minus_one_pow(j);
      s(i - 1, j - 1) = v;
    }
  std::vector<std::size_t> order;
  for (long j = 1; j <= half; ++j) order.push_back(static_cast<std::size_t>(j - 1));
  for (long j = width; j > half; --j) order.push_back(static_cast<std::size_t>(j - 1));
  const ExactMatrix star = s.select_cols(order);
  ExactMatrix j2(static_cast<std::size_t>(width), static_cast<std::size_t>(width));
  for (long k = 0; k < half; ++k) {
    j2(k, k + half) = 1;
    j2(k + half, k) = -1;
  }
  ClassMatrix cm;
  cm.matrix = star * j2 * star.transpose();
  cm.pfaffian = true;
  cm.global_sign = minus_one_pow(a * (a + 2) / 8 + x * a / 2);
  cm.provenance = "Pf(S* A tS*), A = [[0, I], [-I, 0]]";
  return cm;
}

SignedCount scpp_enum(long a, long b, long c) {
  const BoxDims box{static_cast<int>(a), static_cast<int>(b), static_cast<int>(c)};
  return make_count(evaluate(scpp_matrix(a, b, c)), "lgv-pfaffian",
                    SymmetryClass::SC, box, "reference: half-full {k <= c/2}");
}

MinorSummation minor_summation(const ExactMatrix& t, const SkewMatrix& a,
                               std::uint64_t subset_budget) {
  require(t.cols() % 2 == 0, ErrorKind::Dimension,
          "minor summation needs an even number of columns; append a dummy "
          "column");
  require(t.cols() <= t.rows(), ErrorKind::Dimension,
          "minor summation needs n <= p");
  return {sum_of_pfaffian_weighted_minors(t, a, subset_budget),
          pfaffian(congruence(t, a))};
}

}  // namespace ppsign
