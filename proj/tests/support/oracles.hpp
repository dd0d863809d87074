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

// Independent reference computations used only by the tests.

#ifndef PPSIGN_TESTS_SUPPORT_ORACLES_HPP
#define PPSIGN_TESTS_SUPPORT_ORACLES_HPP

#include <functional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "ppsign/lgv.hpp"
#include "ppsign/matrix.hpp"
#include "ppsign/number.hpp"

namespace ppsign::testing {

/// Coefficients of the Gaussian polynomial [n choose k]_q from the q-Pascal
/// rule [n,k] = [n-1,k-1] + q^k [n-1,k].
inline std::vector<BigInt> gaussian_poly(long n, long k) {
  if (k < 0 || k > n) return {};
  std::vector<std::vector<std::vector<BigInt>>> t(n + 1);
  for (long m = 0; m <= n; ++m) {
    t[m].resize(m + 1);
    for (long r = 0; r <= m; ++r) {
      if (r == 0 || r == m) {
        t[m][r] = {BigInt(1)};
        continue;
      }
      const auto& left = t[m - 1][r - 1];
      const auto& right = t[m - 1][r];
      std::vector<BigInt> p(std::max(left.size(), right.size() + r), BigInt(0));
      for (std::size_t e = 0; e < left.size(); ++e) p[e] += left[e];
      for (std::size_t e = 0; e < right.size(); ++e) p[e + r] += right[e];
      t[m][r] = std::move(p);
    }
  }
  return t[n][k];
}

inline BigInt eval_at_minus_one(const std::vector<BigInt>& p) {
  BigInt s = 0;
  for (std::size_t e = 0; e < p.size(); ++e) s += (e % 2 == 0) ? p[e] : BigInt(-p[e]);
  return s;
}

/// A south/east lattice path as its vertex list.
using Path = std::vector<Point>;

inline void all_paths(const Point& from, const Point& to, Path& cur,
                      std::vector<Path>& out) {
  cur.push_back(from);
  if (from.x == to.x && from.y == to.y) {
    out.push_back(cur);
  } else {
    if (from.x < to.x) all_paths({from.x + 1, from.y}, to, cur, out);
    if (from.y > to.y) all_paths({from.x, from.y - 1}, to, cur, out);
  }
  cur.pop_back();
}

inline std::vector<Path> paths_between(const Point& from, const Point& to) {
  std::vector<Path> out;
  if (to.x < from.x || to.y > from.y) return out;
  Path cur;
  all_paths(from, to, cur, out);
  return out;
}

/// Sum of the heights of the east steps: the area between path and x-axis.
inline long area_below(const Path& p) {
  long a = 0;
  for (std::size_t s = 1; s < p.size(); ++s)
    if (p[s].x == p[s - 1].x + 1) a += p[s].y;
  return a;
}

/// Area between the path and the horizontal line through its end point.
inline long area_above_end(const Path& p) {
  return area_below(p) - static_cast<long>(p.back().x - p.front().x) * p.back().y;
}

/// Signed path count by dynamic programming over the grid, tracking the
/// parity of the area below the path.
inline BigInt path_dp(const Point& from, const Point& to) {
  if (to.x < from.x || to.y > from.y) return 0;
  const long w = to.x - from.x, h = from.y - to.y;
  // s[dx][dy]: signed count of paths from `from` to (from.x+dx, from.y-dy).
  std::vector<std::vector<BigInt>> s(w + 1, std::vector<BigInt>(h + 1, BigInt(0)));
  s[0][0] = 1;
  for (long dx = 0; dx <= w; ++dx)
    for (long dy = 0; dy <= h; ++dy) {
      if (dx == 0 && dy == 0) continue;
      BigInt v = 0;
      if (dy > 0) v += s[dx][dy - 1];
      if (dx > 0) {
        const long y = from.y - dy;
        v += (y % 2 == 0) ? s[dx - 1][dy] : BigInt(-s[dx - 1][dy]);
      }
      s[dx][dy] = v;
    }
  return s[w][h];
}

inline bool vertex_disjoint(const std::vector<const Path*>& family) {
  std::set<std::pair<long, long>> seen;
  for (const Path* p : family)
    for (const Point& v : *p)
      if (!seen.insert({v.x, v.y}).second) return false;
  return true;
}

/// Weighted sum over nonintersecting families: the k-th chosen start is
/// joined to ends[k]. Starts are all used unless `free_starts`, in which case
/// every subset of size ends.size() is tried.
inline BigInt nonintersecting_sum(const PathSystem& sys) {
  const std::size_t n = sys.ends.size();
  std::vector<std::vector<std::size_t>> subsets;
  if (!sys.free_starts) {
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    subsets.push_back(all);
  } else {
    const std::size_t p = sys.starts.size();
    for (unsigned mask = 0; mask < (1u << p); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcount(mask)) != n) continue;
      std::vector<std::size_t> s;
      for (std::size_t i = 0; i < p; ++i)
        if (mask & (1u << i)) s.push_back(i);
      subsets.push_back(s);
    }
  }
  BigInt total = 0;
  for (const auto& starts : subsets) {
    std::vector<std::vector<Path>> choices(n);
    for (std::size_t k = 0; k < n; ++k)
      choices[k] = paths_between(sys.starts[starts[k]], sys.ends[k]);
    std::vector<const Path*> family(n);
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
      if (k == n) {
        if (!vertex_disjoint(family)) return;
        long sign_exp = 0;
        for (std::size_t r = 0; r < n; ++r) {
          if (sys.weight == PathWeight::Area2)
            sign_exp += area_below(*family[r]);
          else
            sign_exp += static_cast<long>(starts[r]) + 1 + area_above_end(*family[r]);
        }
        total += (sign_exp % 2 == 0) ? 1 : -1;
        return;
      }
      for (const Path& p : choices[k]) {
        family[k] = &p;
        rec(k + 1);
      }
    };
    rec(0);
  }
  return total;
}

inline ExactMatrix random_int_matrix(std::mt19937_64& gen, std::size_t r, std::size_t c,
                                     int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  ExactMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(gen);
  return m;
}

inline ExactMatrix random_skew(std::mt19937_64& gen, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = d(gen);
      m(j, i) = -m(i, j);
    }
  return m;
}

}  // namespace ppsign::testing

#endif  // PPSIGN_TESTS_SUPPORT_ORACLES_HPP
