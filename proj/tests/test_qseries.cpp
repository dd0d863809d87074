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

#include <algorithm>
#include <random>

#include "doctest.h"
#include "ppsign/error.hpp"
#include "ppsign/oracle.hpp"
#include "ppsign/qseries.hpp"
#include "support/oracles.hpp"

using namespace ppsign;

TEST_CASE("shifted factorial") {
  CHECK(shifted_factorial(3, 2) == 12);
  CHECK(shifted_factorial(make_rational(7, 3), 0) == 1);
  CHECK(shifted_factorial(make_rational(1, 2), 3) == make_rational(15, 8));
  CHECK(shifted_factorial(-2, 4) == 0);
}

TEST_CASE("binomial") {
  CHECK(binom(4, 2) == 6);
  CHECK(binom(3, -1) == 0);
  CHECK(binom(-1, 2) == 1);
  CHECK(binom(2, 5) == 0);
  CHECK(binom(-3, 3) == -10);
  for (long n = -30; n <= 30; ++n)
    for (long k = 1; k <= 12; ++k) CHECK(binom(n, k) == binom(n - 1, k - 1) + binom(n - 1, k));
}

TEST_CASE("binomial with rational top") {
  CHECK(binom_poly(make_rational(1, 2), 2) == make_rational(-1, 8));
  CHECK(binom_poly(5, 2) == 10);
  CHECK(binom_poly(5, -1) == 0);
}

TEST_CASE("q-binomial at -1") {
  CHECK(qbinom_minus1(2, 1) == 0);
  CHECK(qbinom_minus1(4, 2) == 2);
  for (long n = 0; n <= 9; ++n) CHECK(qbinom_minus1(n, 0) == 1);
  CHECK(qbinom_minus1(3, 5) == 0);
  CHECK(qbinom_minus1(3, -1) == 0);
}

TEST_CASE("q-binomial at -1 matches the Gaussian polynomial") {
  for (long n = 0; n <= 20; ++n)
    for (long k = 0; k <= n; ++k)
      CHECK(qbinom_minus1(n, k) == testing::eval_at_minus_one(testing::gaussian_poly(n, k)));
}

TEST_CASE("MacMahon box formula") {
  CHECK(macmahon_box(0, 3, 5) == 1);
  CHECK(macmahon_box(1, 1, 1) == 2);
  CHECK(macmahon_box(2, 2, 2) == 20);
  for (long a = 0; a <= 6; ++a)
    for (long b = 0; b <= 6; ++b)
      for (long c = 0; c <= 6; ++c) {
        const BigInt v = macmahon_box(a, b, c);
        CHECK(v == macmahon_box(b, a, c));
        CHECK(v == macmahon_box(a, c, b));
        CHECK(v == macmahon_box(c, b, a));
      }
}

TEST_CASE("MacMahon box formula matches plain enumeration") {
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b)
      for (int c = 1; c <= 4; ++c)
        CHECK(Rational(macmahon_box(a, b, c)) ==
              weighted_count(make_box(a, b, c), SymmetryClass::Plain,
                             WeightKind{WeightTag::QCubes, 1}));
}

TEST_SUITE("hypergeometric") {
  TEST_CASE("examples") {
    CHECK(hyper_terminating({{0, 5}, {3}, 1}) == 1);
    CHECK(hyper_terminating({{1, 1, -2}, {3, -2}, 1}) == make_rational(3, 2));
    CHECK(hyper_terminating({{make_rational(2, 7), make_rational(-5, 3), 0}, {1, 2}, 1}) == 1);
  }

  TEST_CASE("termination is required") {
    try {
      terminating_order({{make_rational(1, 2)}, {}, 1});
      FAIL("expected InvalidInput");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InvalidInput);
    }
  }

  TEST_CASE("vanishing lower factor inside the range names the index") {
    try {
      hyper_terminating({{-3}, {-1}, 1});
      FAIL("expected Division");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Division);
      CHECK(std::string(e.what()).find("lower parameter 0") != std::string::npos);
    }
  }

  TEST_CASE("a vanishing lower factor beyond the range is harmless") {
    // lower -3 only vanishes at term index 4; the sum stops after n = 2
    CHECK_NOTHROW(hyper_terminating({{-2}, {-3}, 1}));
  }

  TEST_CASE("Pfaff-Saalschutz examples") {
    CHECK(pfaff_saalschutz_rhs(5, 7, 2, 0) == 1);
    CHECK(pfaff_saalschutz_rhs(1, 1, 3, 2) == make_rational(3, 2));
    CHECK(pfaff_saalschutz_rhs(0, make_rational(1, 3), make_rational(7, 2), 4) == 1);
    try {
      pfaff_saalschutz_rhs(1, 1, 0, 2);
      FAIL("expected SingularParameter");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::SingularParameter);
    }
  }

  TEST_CASE("Pfaff-Saalschutz on random Saalschutzian parameters") {
    std::mt19937_64 gen(7);
    std::uniform_int_distribution<long> num(-12, 12), den(1, 6), len(0, 8);
    int done = 0;
    while (done < 100) {
      const Rational a = make_rational(num(gen), den(gen));
      const Rational b = make_rational(num(gen), den(gen));
      const Rational c = make_rational(num(gen), den(gen));
      const long n = len(gen);
      try {
        const Rational rhs = pfaff_saalschutz_rhs(a, b, c, n);
        const Rational lhs = hyper_terminating({{a, b, Rational(-n)}, {c, 1 + a + b - c - n}, 1});
        CHECK(lhs == rhs);
        ++done;
      } catch (const Error& e) {
        REQUIRE((e.kind() == ErrorKind::Division || e.kind() == ErrorKind::SingularParameter));
      }
    }
  }
}
