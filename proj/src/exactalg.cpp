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

#include "ppsign/exactalg.hpp"

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "ppsign/combinations.hpp"
#include "ppsign/error.hpp"
#include "ppsign/qseries.hpp"

namespace ppsign {

BigInt det(const IntMatrix& m) {
  require(m.square(), ErrorKind::Dimension,
          "determinant of a non-square matrix (" + std::to_string(m.rows()) +
              "x" + std::to_string(m.cols()) + ")");
  const std::size_t n = m.rows();
  if (n == 0) return BigInt(1);
  IntMatrix a = m;
  int sign = 1;
  BigInt prev(1);
  BigInt num;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && a(r, k) == 0) ++r;
      if (r == n) return BigInt(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(r, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        if (!mpz_divisible_p(num.get_mpz_t(), prev.get_mpz_t()))
          fail(ErrorKind::InternalConsistency,
               "Bareiss step left the integers at pivot " + std::to_string(k));
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Rational det(const ExactMatrix& m) {
  require(m.square(), ErrorKind::Dimension,
          "determinant of a non-square matrix (" + std::to_string(m.rows()) +
              "x" + std::to_string(m.cols()) + ")");
  const std::size_t n = m.rows();
  IntMatrix scaled(n, n);
  BigInt scale(1);
  for (std::size_t i = 0; i < n; ++i) {
    BigInt l(1);
    for (std::size_t j = 0; j < n; ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j)
      scaled(i, j) = m(i, j).get_num() * (l / m(i, j).get_den());
    scale *= l;
  }
  return make_rational(det(scaled), scale);
}

namespace {

// Enumerates the matchings {m1<m2}, {m3<m4}, ... with m1 < m3 < ... and
// accumulates sgn(m1 m2 ... m2n) * prod M(m_{2k-1}, m_{2k}).
void matching_sum(const ExactMatrix& m, std::vector<bool>& used,
                  std::vector<std::size_t>& word, Rational& total) {
  const std::size_t n = m.rows();
  std::size_t first = 0;
  while (first < n && used[first]) ++first;
  if (first == n) {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < word.size(); ++i)
      for (std::size_t j = i + 1; j < word.size(); ++j)
        if (word[i] > word[j]) ++inversions;
    Rational term(inversions % 2 ? -1 : 1);
    for (std::size_t k = 0; k < word.size(); k += 2)
      term *= m(word[k], word[k + 1]);
    total += term;
    return;
  }
  used[first] = true;
  word.push_back(first);
  for (std::size_t partner = first + 1; partner < n; ++partner) {
    if (used[partner] || m(first, partner) == 0) continue;
    used[partner] = true;
    word.push_back(partner);
    matching_sum(m, used, word, total);
    word.pop_back();
    used[partner] = false;
  }
  word.pop_back();
  used[first] = false;
}

void swap_index(ExactMatrix& a, std::size_t p, std::size_t q) {
  if (p == q) return;
  for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(q, j));
  for (std::size_t i = 0; i < a.rows(); ++i) std::swap(a(i, p), a(i, q));
}

}  // namespace

Rational pfaffian_by_matchings(const SkewMatrix& m) {
  const std::size_t n = m.size();
  if (n % 2 == 1)
    fail(ErrorKind::Dimension,
         "Pfaffian of odd dimension " + std::to_string(n));
  if (n == 0) return Rational(1);
  std::vector<bool> used(n, false);
  std::vector<std::size_t> word;
  word.reserve(n);
  Rational total(0);
  matching_sum(m.matrix(), used, word, total);
  return total;
}

Rational pfaffian_by_elimination(const SkewMatrix& m) {
  const std::size_t n = m.size();
  if (n % 2 == 1)
    fail(ErrorKind::Dimension,
         "Pfaffian of odd dimension " + std::to_string(n));
  ExactMatrix a = m.matrix();
  Rational result(1);
  for (std::size_t k = 0; k < n; k += 2) {
    if (a(k, k + 1) == 0) {
      std::size_t j = k + 2;
      while (j < n && a(k, j) == 0) ++j;
      if (j == n) return Rational(0);
      swap_index(a, k + 1, j);
      result = -result;
    }
    const Rational pivot = a(k, k + 1);
    result *= pivot;
    for (std::size_t i = k + 2; i < n; ++i) {
      // Clear a(k, i) using index k+1, then a(k+1, i) using index k. Both are
      // unimodular congruences and leave the Pfaffian unchanged.
      const Rational c1 = a(k, i) / pivot;
      const Rational c2 = -a(k + 1, i) / pivot;
      if (c1 == 0 && c2 == 0) continue;
      for (std::size_t j = k; j < n; ++j) {
        a(i, j) -= c1 * a(k + 1, j) + c2 * a(k, j);
      }
      for (std::size_t r = k; r < n; ++r) {
        a(r, i) -= c1 * a(r, k + 1) + c2 * a(r, k);
      }
    }
  }
  return result;
}

Rational pfaffian(const SkewMatrix& m) {
  if (m.size() <= 8) return pfaffian_by_matchings(m);
  return pfaffian_by_elimination(m);
}

namespace {

std::uint64_t checked_subset_count(std::size_t p, std::size_t n,
                                   std::uint64_t budget) {
  require(n <= p, ErrorKind::Dimension,
          "minor size " + std::to_string(n) + " exceeds row count " +
              std::to_string(p));
  const BigInt total = binom(static_cast<long>(p), static_cast<long>(n));
  if (total > BigInt(std::to_string(budget)))
    fail(ErrorKind::ResourceLimit,
         "binomial(" + std::to_string(p) + "," + std::to_string(n) +
             ") = " + total.get_str() + " row subsets exceed the budget of " +
             std::to_string(budget));
  return total.get_ui();
}

}  // namespace

Rational sum_of_minors_serial(const ExactMatrix& t,
                              std::uint64_t subset_budget) {
  const std::size_t p = t.rows(), n = t.cols();
  checked_subset_count(p, n, subset_budget);
  Rational total(0);
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  do {
    total += det(t.select_rows(idx));
  } while (next_combination(idx, p));
  return total;
}

Rational sum_of_minors(const ExactMatrix& t, std::uint64_t subset_budget) {
  const std::size_t p = t.rows(), n = t.cols();
  const std::uint64_t count = checked_subset_count(p, n, subset_budget);
  const std::uint64_t chunk = 256;
  const std::int64_t chunks = static_cast<std::int64_t>((count + chunk - 1) / chunk);
  std::vector<Rational> partial(static_cast<std::size_t>(chunks), Rational(0));
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t c = 0; c < chunks; ++c) {
    const std::uint64_t begin = static_cast<std::uint64_t>(c) * chunk;
    const std::uint64_t end = std::min(count, begin + chunk);
    std::vector<std::size_t> idx = unrank_combination(begin, p, n);
    Rational acc(0);
    for (std::uint64_t r = begin; r < end; ++r) {
      acc += det(t.select_rows(idx));
      next_combination(idx, p);
    }
    partial[static_cast<std::size_t>(c)] = acc;
  }
  Rational total(0);
  for (const auto& v : partial) total += v;
  return total;
}

Rational sum_of_pfaffian_weighted_minors(const ExactMatrix& t,
                                         const SkewMatrix& a,
                                         std::uint64_t subset_budget) {
  const std::size_t p = t.rows(), n = t.cols();
  require(a.size() == p, ErrorKind::Dimension,
          "skew weight matrix must be p x p");
  require(n % 2 == 0, ErrorKind::Dimension,
          "minor summation needs an even number of columns");
  checked_subset_count(p, n, subset_budget);
  Rational total(0);
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  do {
    const Rational w = pfaffian(SkewMatrix(a.matrix().principal(idx)));
    if (w != 0) total += w * det(t.select_rows(idx));
  } while (next_combination(idx, p));
  return total;
}

SkewMatrix sign_skew_matrix(std::size_t n) {
  ExactMatrix a(n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l)
      a(k, l) = (l > k) ? 1 : (l < k ? -1 : 0);
  return SkewMatrix(std::move(a));
}

SkewMatrix congruence(const ExactMatrix& t, const SkewMatrix& a) {
  require(t.rows() == a.size(), ErrorKind::Dimension,
          "congruence dimension mismatch");
  return SkewMatrix(t.transpose() * a.matrix() * t);
}

}  // namespace ppsign
