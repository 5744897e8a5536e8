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

#include <vector>

#include "classdata.hpp"
#include "doctest.h"
#include "exact.hpp"
#include "formulas.hpp"
#include "matrix.hpp"
#include "partition.hpp"
#include "poly.hpp"

using namespace gtau;

namespace {

Poly Pol(unsigned q, std::vector<Elem> c) { return Poly(Field::get(q), std::move(c)); }
Partition Par(std::vector<int> parts) { return Partition(std::move(parts)); }
Poly z_minus_1(unsigned q) { return Poly::linear(Field::get(q), 1); }

ClassData identity_class(int n, unsigned q) {
  return ClassData(q, {{z_minus_1(q), Partition(std::vector<int>(static_cast<std::size_t>(n), 1))}});
}

}  // namespace

TEST_CASE("B factor examples") {
  for (long q : {2L, 3L, 4L, 5L}) {
    CHECK(B_factor(z_minus_1(static_cast<unsigned>(q)), Par({1, 1})) == q * (1 - Rational(1, q * q)));
  }
  // z^2 + z + 1 over F2 is self-conjugate of degree 2: |U(1,2)| = 3.
  CHECK(B_factor(Pol(2, {1, 1, 1}), Par({1})) == 3);
  // z^2 + 1 over F3 is self-conjugate of degree 2: |U(1,3)| = 4.
  CHECK(B_factor(Pol(3, {1, 0, 1}), Par({1})) == 4);
  // {z - 2, z - 3} over F5.
  CHECK(B_pair(Pol(5, {3, 1}), Par({1})) == 4);
  CHECK(B_pair(Pol(7, {5, 1}), Par({1})) == 6);
}

TEST_CASE("probability examples") {
  CHECK(prob_ggtau(identity_class(2, 2)) == Rational(2, 3));
  for (unsigned q : {2u, 3u, 5u}) CHECK(prob_ggtau(ClassData(q, {{z_minus_1(q), Par({2})}})) == 0);
  CHECK(prob_ggtau(ClassData(2, {{Pol(2, {1, 1, 1}), Par({1})}})) == Rational(1, 3));
  // Non-real classes never occur: {z - 2} over F5 without its partner z - 3.
  CHECK(prob_ggtau(ClassData(5, {{Pol(5, {3, 1}), Par({1})}})) == 0);
}

TEST_CASE("solution count examples") {
  CHECK(count_solutions(identity_class(2, 2)) == 4);
  CHECK(count_solutions(identity_class(3, 2)) == 28);
  CHECK(count_solutions(ClassData(2, {{Pol(2, {1, 1, 1}), Par({1})}})) == 1);
  for (long q : {2L, 3L, 4L, 5L}) {
    CHECK(count_solutions(identity_class(2, static_cast<unsigned>(q))) == Integer((q - 1) * q * q));
  }
}

TEST_CASE("identity count is the alternating product") {
  for (int n = 1; n <= 8; ++n) {
    for (long q : {2L, 3L, 4L, 5L, 7L}) {
      Integer alternating = 1;
      for (int i = 1; i <= n; ++i) alternating *= ipow(q, static_cast<unsigned long>(i)) - (i % 2 == 1 ? 1 : 0);
      CHECK(gow_macdonald_count(n, q) == alternating);
      if (n <= 5 && q <= 5) CHECK(count_solutions(identity_class(n, static_cast<unsigned>(q))) == alternating);
    }
  }
}

TEST_CASE("probabilities sum to one") {
  for (unsigned q : {2u, 3u, 4u}) {
    for (int n = 1; n <= 4; ++n) {
      CAPTURE(n);
      CAPTURE(q);
      Rational total = 0;
      for (const ClassData& c : enumerate_class_data(n, q)) {
        const Rational p = prob_ggtau(c);
        CHECK(p >= 0);
        if (!c.is_real()) CHECK(p == 0);
        // Solution count per element of the class times the class size.
        CHECK(p * gl_order(n, q) == Rational(count_solutions(c) * class_size(c)));
        total += p;
      }
      CHECK(total == 1);
    }
  }
}

TEST_CASE("symplectic unipotent examples") {
  for (long q : {2L, 3L, 5L, 7L}) {
    CHECK(prob_unipotent(Par({1, 1}), q, UnipotentTarget::kSp) == Rational(1, q * q * q - q));
    CHECK(prob_unipotent(Par({2}), q, UnipotentTarget::kSp) == Rational(1, q));
    CHECK(prob_unipotent(Par({2, 1}), q, UnipotentTarget::kSp) == 0);
    const ClassData id = identity_class(2, static_cast<unsigned>(q));
    CHECK(prob_sp_class(id) == Rational(1, q * q * q - q));
  }
  CHECK(prob_sp_class(ClassData(5, {{Pol(5, {3, 1}), Par({1, 1})}})) == 0);
  CHECK(parse_unipotent_target("sp") == UnipotentTarget::kSp);
}

TEST_CASE("symplectic class probabilities sum to one") {
  for (unsigned q : {2u, 3u}) {
    for (int m = 1; m <= 2; ++m) {
      Rational total = 0;
      for (const ClassData& c : enumerate_class_data(2 * m, q)) total += prob_sp_class(c);
      CHECK(total == 1);
    }
  }
}

TEST_CASE("gg^tau unipotent probability matches the class probability") {
  for (unsigned q : {2u, 3u, 5u}) {
    for (int k = 1; k <= 4; ++k) {
      for (const Partition& mu : enumerate_partitions(k)) {
        const ClassData c(q, {{z_minus_1(q), mu}});
        CHECK(prob_unipotent(mu, q, UnipotentTarget::kGLggtau) == prob_ggtau(c));
      }
    }
  }
}

TEST_CASE("minimum centralizer bound") {
  const Interval b = min_centralizer_bound(2, 2);
  CHECK(b.lo > Rational(20, 100));
  CHECK(b.hi < Rational(21, 100));
  // Prefactor tends to 1: bound / q^{floor(n/2)} grows with q at fixed n.
  Rational prev = 0;
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    const Rational scaled = min_centralizer_bound(6, q).lo / ipow(q, 3);
    CHECK(scaled > prev);
    prev = scaled;
  }
  CHECK(prev < 1);
}

TEST_CASE("unipotent centralizer inequalities") {
  const Report r = verify_centbounduni(10, {2, 3, 4, 5});
  CHECK_MESSAGE(r.passed(), r.failure());
}
