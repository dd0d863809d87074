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

#include <random>
#include <vector>

#include "doctest.h"
#include "ppsign/error.hpp"
#include "ppsign/exactalg.hpp"
#include "ppsign/polynomial.hpp"
#include "support/oracles.hpp"

using namespace ppsign;

namespace {

template <typename F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InternalConsistency;
}

}  // namespace

TEST_SUITE("det") {
  TEST_CASE("small examples") {
    CHECK(det(ExactMatrix{{1, 2}, {3, 4}}) == -2);
    CHECK(det(ExactMatrix::identity(5)) == 1);
    CHECK(det(ExactMatrix{{1, 6}, {0, 4}}) == 4);
    CHECK(det(ExactMatrix(0, 0)) == 1);
    CHECK(det(IntMatrix{{2, 0}, {0, 3}}) == 6);
  }

  TEST_CASE("non-square is a dimension error") {
    CHECK(kind_of([] { det(ExactMatrix(2, 3)); }) == ErrorKind::Dimension);
  }

  TEST_CASE("rational entries") {
    ExactMatrix m{{make_rational(1, 2), make_rational(1, 3)},
                  {make_rational(1, 4), make_rational(1, 5)}};
    CHECK(det(m) == make_rational(1, 10) - make_rational(1, 12));
  }

  TEST_CASE("row swap negates, equal rows vanish") {
    std::mt19937_64 gen(11);
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t n = 2 + trial % 5;
      ExactMatrix m = testing::random_int_matrix(gen, n, n, -9, 9);
      ExactMatrix s = m;
      for (std::size_t j = 0; j < n; ++j) std::swap(s(0, j), s(1, j));
      CHECK(det(s) == -det(m));
      for (std::size_t j = 0; j < n; ++j) s(0, j) = s(1, j);
      CHECK(det(s) == 0);
    }
  }

  TEST_CASE("block triangular matrices multiply") {
    std::mt19937_64 gen(5);
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t p = 1 + trial % 3, q = 1 + (trial / 3) % 3;
      const ExactMatrix a = testing::random_int_matrix(gen, p, p, -5, 5);
      const ExactMatrix b = testing::random_int_matrix(gen, q, q, -5, 5);
      const ExactMatrix c = testing::random_int_matrix(gen, p, q, -5, 5);
      ExactMatrix m(p + q, p + q);
      for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j) m(i, j) = a(i, j);
      for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j) m(p + i, p + j) = b(i, j);
      for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < q; ++j) m(i, p + j) = c(i, j);
      CHECK(det(m) == det(a) * det(b));
    }
  }

  TEST_CASE("integer and rational paths agree") {
    std::mt19937_64 gen(3);
    for (int trial = 0; trial < 20; ++trial) {
      const ExactMatrix m = testing::random_int_matrix(gen, 6, 6, -20, 20);
      IntMatrix z(6, 6);
      for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) z(i, j) = m(i, j).get_num();
      CHECK(Rational(det(z)) == det(m));
    }
  }
}

TEST_SUITE("pfaffian") {
  TEST_CASE("small examples") {
    CHECK(pfaffian(SkewMatrix(ExactMatrix{{0, 3}, {-3, 0}})) == 3);
    const ExactMatrix m{{0, 1, 2, 3}, {-1, 0, 4, 5}, {-2, -4, 0, 6}, {-3, -5, -6, 0}};
    CHECK(pfaffian(SkewMatrix(m)) == 8);
    CHECK(pfaffian(SkewMatrix(ExactMatrix(0, 0))) == 1);
  }

  TEST_CASE("errors") {
    CHECK(kind_of([] { pfaffian(SkewMatrix(ExactMatrix(3, 3))); }) == ErrorKind::Dimension);
    CHECK(kind_of([] { SkewMatrix(ExactMatrix{{0, 1}, {1, 0}}); }) == ErrorKind::InvalidInput);
    CHECK(kind_of([] { SkewMatrix(ExactMatrix{{1, 0}, {0, 0}}); }) == ErrorKind::InvalidInput);
  }

  TEST_CASE("square equals determinant on random skew matrices") {
    std::mt19937_64 gen(2024);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t n = 2 * (1 + trial % 5);
      const SkewMatrix s(testing::random_skew(gen, n, -9, 9));
      const Rational pf = pfaffian(s);
      CHECK(pf * pf == det(s.matrix()));
    }
  }

  TEST_CASE("elimination agrees with the matching sum") {
    std::mt19937_64 gen(99);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t n = 2 * (1 + trial % 4);
      ExactMatrix m = testing::random_skew(gen, n, -3, 3);
      if (trial % 3 == 0)  // sparse instances exercise the pair swaps
        for (std::size_t j = 1; j < n; ++j) m(0, j) = m(j, 0) = 0;
      if (trial % 3 == 1) m(0, 1) = m(1, 0) = 0;
      const SkewMatrix s(m);
      CHECK(pfaffian_by_elimination(s) == pfaffian_by_matchings(s));
    }
  }

  TEST_CASE("large matrices use elimination") {
    std::mt19937_64 gen(8);
    const SkewMatrix s(testing::random_skew(gen, 12, -4, 4));
    const Rational pf = pfaffian(s);
    CHECK(pf * pf == det(s.matrix()));
  }
}

TEST_SUITE("minors") {
  TEST_CASE("identity has one minor") {
    CHECK(sum_of_minors(ExactMatrix::identity(2)) == 1);
  }

  TEST_CASE("zero row contributes nothing") {
    ExactMatrix t{{1, 2}, {0, 0}, {3, 5}};
    // subsets {1,2} and {2,3} contain the zero row
    CHECK(sum_of_minors(t) == det(ExactMatrix{{1, 2}, {3, 5}}));
  }

  TEST_CASE("serial and parallel agree") {
    std::mt19937_64 gen(17);
    for (int trial = 0; trial < 10; ++trial) {
      const ExactMatrix t = testing::random_int_matrix(gen, 12, 4, -3, 3);
      CHECK(sum_of_minors(t) == sum_of_minors_serial(t));
    }
  }

  TEST_CASE("sum of minors is the Pfaffian with the sign matrix") {
    std::mt19937_64 gen(4);
    for (int trial = 0; trial < 20; ++trial) {
      const ExactMatrix t = testing::random_int_matrix(gen, 4 + trial % 4, 2, -5, 5);
      CHECK(sum_of_minors(t) == pfaffian(congruence(t, sign_skew_matrix(t.rows()))));
    }
  }

  TEST_CASE("budget") {
    const ExactMatrix t(40, 20);
    CHECK(kind_of([&] { sum_of_minors(t, 1000); }) == ErrorKind::ResourceLimit);
    CHECK(kind_of([&] { sum_of_minors(ExactMatrix(2, 3)); }) == ErrorKind::Dimension);
  }
}

TEST_SUITE("polynomial") {
  using P = ExactPolynomial;

  TEST_CASE("interpolation examples") {
    std::vector<std::pair<Rational, Rational>> pts{{0, 1}, {1, 1}};
    CHECK(interpolate(pts) == P::constant(1));
    std::vector<std::pair<Rational, Rational>> sq{{0, 0}, {1, 1}, {2, 4}};
    CHECK(interpolate(sq) == P({0, 0, 1}));
    std::vector<std::pair<Rational, Rational>> dup{{1, 0}, {1, 2}};
    CHECK(kind_of([&] { interpolate(dup); }) == ErrorKind::InvalidInput);
  }

  TEST_CASE("interpolation reproduces the points") {
    std::mt19937_64 gen(1);
    std::uniform_int_distribution<int> d(-50, 50);
    std::vector<std::pair<Rational, Rational>> pts;
    for (int x = -3; x <= 4; ++x) pts.emplace_back(make_rational(x, 3), d(gen));
    const P p = interpolate(pts);
    for (const auto& [x, y] : pts) CHECK(p(x) == y);
  }

  TEST_CASE("divisibility") {
    CHECK(divides(P({0, 1}), P({0, 0, 1})));
    CHECK_FALSE(divides(P({1, 1}), P({1, 0, 1})));
    const auto [q, r] = divmod(P({-1, 0, 1}), P({1, 1}));
    CHECK(q == P({-1, 1}));
    CHECK(r.is_zero());
    CHECK(kind_of([] { divmod(P({1}), P()); }) == ErrorKind::Division);
  }

  TEST_CASE("linear substitution and rising factorials") {
    const P p({1, 2, 3});
    CHECK(p.substitute_linear(-1, 0) == P({1, -2, 3}));
    const P r = rising_factorial_poly(make_rational(1, 2), 1, 2);  // (b/2+1)(b/2+2)
    CHECK(r(Rational(2)) == 6);
    CHECK(r.degree() == 2);
  }

  TEST_CASE("fit_polynomial confirms or refuses") {
    const auto cube = [](long x) { return Rational(x * x * x); };
    CHECK(fit_polynomial(cube, 0, 1, 3) == P({0, 0, 0, 1}));
    CHECK(kind_of([&] { fit_polynomial(cube, 0, 1, 2); }) == ErrorKind::NeedsMoreSamples);
  }
}
