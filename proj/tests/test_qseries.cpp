// Copyright 2026 The gtau Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "doctest.h"
#include "exact.hpp"
#include "interval.hpp"
#include "qseries.hpp"

using namespace gtau;

namespace {

const Laurent kOne(1);
const Laurent kQ = Laurent::t();

}  // namespace

TEST_CASE("q-Pochhammer and q-binomial values") {
  CHECK(q_pochhammer(0, 2) == 1);
  CHECK(q_pochhammer(2, 2) == Rational(3, 8));
  for (long q : {2L, 3L, 7L}) {
    CHECK(q_binomial(2, 1, q) == q + 1);
    CHECK(q_binomial(4, 0, q) == 1);
    CHECK(q_binomial(4, 4, q) == 1);
    // Pascal: [n,m] = [n-1,m-1] + q^m [n-1,m].
    for (unsigned n = 1; n <= 7; ++n)
      for (unsigned m = 1; m < n; ++m)
        CHECK(q_binomial(n, m, q) == q_binomial(n - 1, m - 1, q) + rpow(q, m) * q_binomial(n - 1, m, q));
  }
  CHECK_THROWS_AS(q_binomial(2, 3, 2), InvalidArgument);
  CHECK_THROWS_AS(q_pochhammer(2, 0), InvalidArgument);
}

TEST_CASE("symbolic Pochhammer agrees with evaluation") {
  for (unsigned a = 0; a <= 6; ++a) {
    for (long q : {2L, 3L, 5L}) {
      CHECK(pochhammer_inv(a).eval(q) == q_pochhammer(a, q));
      for (unsigned m = 0; m <= a; ++m) CHECK(t_binomial(a, m).eval(q) == q_binomial(a, m, q));
    }
    if (a > 0) CHECK(t_factorial(a).eval(1) == 0);
    CHECK(t_factorial(a) * t_binomial(a + 2, a) == t_factorial(a + 2).divided_exact(t_factorial(2)));
  }
}

TEST_CASE("q-series sums: worked values") {
  CHECK(qs2_lhs(2) == kOne - Laurent::t(-1));
  CHECK(qs2_rhs(2) == kOne - Laurent::t(-1));
  CHECK(qs2_lhs(3).is_zero());
  CHECK(qs2_rhs(3).is_zero());
  CHECK(qs1_lhs(1) == kQ - kOne);
  CHECK(qs1_rhs(1) == kQ - kOne);
}

TEST_CASE("q-series sums hold symbolically up to n = 12") {
  for (QSum kind : {QSum::kEuler, QSum::kQs1, QSum::kQs2, QSum::kQs3}) {
    const Report r = verify_qsum(kind, 12);
    CHECK_MESSAGE(r.passed(), r.failure());
  }
  for (unsigned n = 0; n <= 12; ++n) {
    CHECK(qs1_lhs(n) == qs1_rhs(n));
    CHECK(qs3_lhs(n) == qs3_rhs(n));
    if (n % 2 == 1) CHECK(qs2_rhs(n).is_zero());
  }
  CHECK(parse_qsum("qs3") == QSum::kQs3);
  CHECK_THROWS_AS(parse_qsum("qs4"), InvalidArgument);
}

TEST_CASE("pentagonal bounds at q = 2") {
  const PentagonalBounds b = pentagonal_bounds(2, 60);
  CHECK(b.value.lo > Rational(2887, 10000));
  CHECK(b.value.hi < Rational(2888, 10000));
  CHECK(b.lower < b.value.lo);
  CHECK(b.value.hi < b.upper);
  CHECK(b.np0 == Rational(1, 4));
  CHECK(b.np0 <= b.value.lo);
  CHECK(b.upper == Rational(1, 2));
}

TEST_CASE("pentagonal bounds tighten as q grows") {
  for (long q : {2L, 3L, 4L, 5L, 7L, 10L, 16L}) {
    CAPTURE(q);
    const PentagonalBounds b = pentagonal_bounds(q, 30);
    CHECK(b.lower < b.value.lo);
    CHECK(b.value.hi < b.upper);
    CHECK(b.np0 <= b.value.lo);
    const Rational expected_lower = 1 - Rational(1, q) - rpow(q, -2) + rpow(q, -5) + rpow(q, -7) - rpow(q, -12) -
                                    rpow(q, -15);
    CHECK(b.lower == expected_lower);
  }
  CHECK(pentagonal_bounds(10, 30).value.width() < Rational(1, 10000));
  CHECK_THROWS_AS(pentagonal_bounds(1, 10), InvalidArgument);
}

TEST_CASE("certified products enclose their partial products") {
  // prod_{i>=1} (1 - 2^{-i}); every longer partial product lies inside the
  // enclosure computed from a shorter one.
  const Interval coarse = certified_product(1, 2, 1, 1, 10);
  Rational partial = 1;
  for (int i = 1; i <= 40; ++i) partial *= 1 - rpow(2, -i);
  CHECK(coarse.hi >= partial);
  CHECK(coarse.lo <= partial);
  const Interval fine = certified_product(1, 2, 1, 1, 40);
  CHECK(fine.width() < coarse.width());
  CHECK(fine.lo >= coarse.lo);
}
