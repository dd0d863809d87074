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

#include "doctest.h"
#include "ppsign/error.hpp"
#include "ppsign/oracle.hpp"
#include "ppsign/qseries.hpp"

using namespace ppsign;

namespace {

BigInt signed_value(BoxDims box, SymmetryClass cls) { return signed_count(box, cls).value; }

}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("enumeration examples") {
    CHECK(collect_class({1, 1, 1}, SymmetryClass::Plain).size() == 2);
    CHECK(collect_class({2, 2, 2}, SymmetryClass::SC).size() == 4);
    const auto tc = collect_class({2, 2, 2}, SymmetryClass::TC);
    REQUIRE(tc.size() == 2);
    CHECK(tc[0].rows() == std::vector<std::vector<int>>{{1, 1}, {1, 1}});
    CHECK(tc[1].rows() == std::vector<std::vector<int>>{{2, 1}, {1, 0}});
  }

  TEST_CASE("enumeration yields valid distinct members in lexicographic order") {
    for (SymmetryClass cls : kAllClasses) {
      const BoxDims box{4, 4, 4};
      const auto all = collect_class(box, cls);
      for (std::size_t n = 0; n < all.size(); ++n) {
        CHECK(satisfies(all[n], cls));
        if (n > 0) {
          const auto prev = all[n - 1].heights(), cur = all[n].heights();
          CHECK(std::lexicographical_compare(prev.begin(), prev.end(), cur.begin(), cur.end()));
        }
      }
    }
  }

  TEST_CASE("pruned generation agrees with filtering the plain partitions") {
    for (SymmetryClass cls : kAllClasses) {
      for (const BoxDims box : {BoxDims{2, 2, 2}, BoxDims{3, 3, 2}, BoxDims{2, 3, 3},
                                BoxDims{3, 3, 3}, BoxDims{4, 4, 2}}) {
        try {
          check_shape(box, cls);
        } catch (const Error&) {
          continue;
        }
        std::size_t filtered = 0;
        enumerate_class(box, SymmetryClass::Plain, [&](const PlanePartition& p) {
          filtered += satisfies(p, cls);
        });
        CHECK(collect_class(box, cls).size() == filtered);
      }
    }
  }

  TEST_CASE("signed count examples") {
    CHECK(signed_value({2, 2, 2}, SymmetryClass::TC) == 0);
    CHECK(signed_value({3, 3, 2}, SymmetryClass::TC) == 1);
    CHECK(signed_value({2, 2, 2}, SymmetryClass::SC) == 2);
    CHECK(signed_value({2, 2, 4}, SymmetryClass::SC) == 3);
    const auto sc = signed_count({3, 3, 3}, SymmetryClass::SC);
    CHECK(sc.value == 0);
    CHECK(sc.sign_convention == "empty class");
  }

  TEST_CASE("parallel and serial counts agree") {
    for (SymmetryClass cls : {SymmetryClass::TC, SymmetryClass::STC, SymmetryClass::SC,
                              SymmetryClass::CSSC, SymmetryClass::TSSC, SymmetryClass::CSTC}) {
      const BoxDims box = cls == SymmetryClass::TC || cls == SymmetryClass::STC
                              ? BoxDims{5, 5, 6}
                              : BoxDims{6, 6, 6};
      const auto p = signed_count(box, cls);
      const auto s = signed_count_serial(box, cls);
      CHECK(p.value == s.value);
      CHECK(s.method == "oracle-serial");
    }
  }

  TEST_CASE("weighted counts") {
    CHECK(weighted_count({1, 1, 1}, SymmetryClass::Plain, {WeightTag::QCubes, 1}) == 2);
    CHECK(weighted_count({2, 2, 2}, SymmetryClass::Plain, {WeightTag::QCubes, 1}) == 20);
    const Rational w =
        weighted_count({2, 2, 2}, SymmetryClass::Cyclic, {WeightTag::QOrbits, -1});
    const BigInt s = signed_value({2, 2, 2}, SymmetryClass::CSSC);
    CHECK(abs(w) == Rational(s * s));
    CHECK(weighted_count({2, 2, 2}, SymmetryClass::TC, {WeightTag::SignedOrbits, 1}) == 0);
    try {
      weighted_count({2, 2, 2}, SymmetryClass::Plain, {WeightTag::QOrbits, -1});
      FAIL("expected UnsupportedClass");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::UnsupportedClass);
    }
  }

  TEST_CASE("cssc square-root mechanism") {
    for (int alpha = 1; alpha <= 3; ++alpha) {
      const BoxDims box{2 * alpha, 2 * alpha, 2 * alpha};
      const BigInt s = signed_value(box, SymmetryClass::CSSC);
      const Rational w = weighted_count(box, SymmetryClass::Cyclic, {WeightTag::QOrbits, -1});
      CHECK(Rational(s * s) == abs(w));
    }
  }

  TEST_CASE("signed count needs complementation") {
    try {
      signed_count({2, 2, 2}, SymmetryClass::Cyclic);
      FAIL("expected UnsupportedClass");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::UnsupportedClass);
    }
  }

  TEST_CASE("node budget") {
    OracleConfig cfg;
    cfg.node_budget = 50;
    for (bool parallel : {false, true}) {
      cfg.parallel = parallel;
      try {
        signed_count({4, 4, 6}, SymmetryClass::TC, cfg);
        FAIL("expected ResourceLimit");
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ResourceLimit);
      }
    }
  }

  TEST_CASE("alternating sign matrices") {
    const long asm_numbers[] = {1, 2, 7, 42, 429, 7436, 218348};
    for (int n = 1; n <= 7; ++n) CHECK(count_asm(n) == asm_numbers[n - 1]);
    CHECK(count_vsasm(1) == 1);
    CHECK(count_vsasm(2) == 0);
    CHECK(count_vsasm(3) == 1);
    CHECK(count_vsasm(5) == 3);
    CHECK(count_vsasm(7) == 26);
    try {
      count_vsasm(9);
      FAIL("expected ResourceLimit");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ResourceLimit);
    }
  }
}
