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

#include <map>
#include <set>
#include <vector>

#include "doctest.h"
#include "exact.hpp"
#include "oracle.hpp"
#include "partition.hpp"
#include "symfunc.hpp"

using namespace gtau;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

const Laurent kOne(1);
const Laurent kT = Laurent::t();

}  // namespace

TEST_CASE("Hall-Littlewood polynomial examples") {
  const SymSeries empty = hl_polynomial(Partition(), 3);
  CHECK(empty.terms().size() == 1);
  CHECK(empty.coeff(Partition()) == kOne);

  const SymSeries p1 = hl_polynomial(P({1}), 3);
  CHECK(p1.terms().size() == 1);
  CHECK(p1.coeff(P({1})) == kOne);

  const SymSeries p2 = hl_polynomial(P({2}), 2);
  CHECK(p2.coeff(P({2})) == kOne);
  CHECK(p2.coeff(P({1, 1})) == kOne - kT);

  CHECK(hl_polynomial(P({1, 1, 1}), 2).is_zero());
}

TEST_CASE("Hall-Littlewood polynomials specialize to Schur and monomial functions") {
  for (int m = 1; m <= 4; ++m) {
    for (int k = 0; k <= 6; ++k) {
      for (const Partition& lam : enumerate_partitions(k)) {
        CAPTURE(m);
        CAPTURE(lam.to_string());
        const SymSeries hl = hl_polynomial(lam, m);
        CHECK(hl.eval_t(0) == schur(lam, m));
        CHECK(hl.eval_t(1) == monomial_sym(lam, m));
      }
    }
  }
}

TEST_CASE("symmetrization and branching agree") {
  for (int m = 1; m <= 4; ++m)
    for (int k = 0; k <= 5; ++k)
      for (const Partition& lam : enumerate_partitions(k)) CHECK(hl_polynomial(lam, m) == hl_polynomial_branching(lam, m));
}

TEST_CASE("elementary functions are column Hall-Littlewood polynomials") {
  for (int r = 0; r <= 4; ++r) {
    std::vector<int> column(static_cast<std::size_t>(r), 1);
    CHECK(elementary(r, 4) == hl_polynomial(Partition(column), 4));
  }
}

TEST_CASE("Pieri rule examples") {
  const auto a = pieri_expand(P({1}), 1);
  CHECK(a.size() == 2);
  CHECK(a.at(P({2})) == kOne);
  CHECK(a.at(P({1, 1})) == kOne + kT);

  const auto b = pieri_expand(Partition(), 3);
  CHECK(b.size() == 1);
  CHECK(b.at(P({1, 1, 1})) == kOne);

  const auto c = pieri_expand(P({2}), 1);
  CHECK(c.size() == 2);
  CHECK(c.at(P({3})) == kOne);
  CHECK(c.at(P({2, 1})) == kOne);
}

TEST_CASE("Pieri coefficients reproduce the product expansion") {
  constexpr int kVars = 5;
  for (int k = 0; k <= 3; ++k) {
    for (const Partition& mu : enumerate_partitions(k)) {
      for (int r = 1; r <= 2; ++r) {
        CAPTURE(mu.to_string());
        CAPTURE(r);
        const auto coeffs = pieri_expand(mu, r);
        std::set<Partition> keys;
        for (const auto& [lam, c] : coeffs) keys.insert(lam);
        const auto covers = vertical_strip_covers(mu, r);
        CHECK(keys == std::set<Partition>(covers.begin(), covers.end()));
        const SymSeries prod = multiply(hl_polynomial(mu, kVars), elementary(r, kVars), k + r);
        CHECK(to_p_basis(prod) == coeffs);
      }
    }
  }
}

TEST_CASE("Hall coefficient examples") {
  const Laurent g2 = hall_coefficient(P({1}), P({1}), P({2}));
  const Laurent g11 = hall_coefficient(P({1}), P({1}), P({1, 1}));
  for (long p : {2L, 3L, 5L}) {
    CHECK(g2.eval(p) == 1);
    CHECK(g11.eval(p) == p + 1);
  }
  for (int k = 0; k <= 4; ++k)
    for (const Partition& lam : enumerate_partitions(k)) CHECK(hall_coefficient(Partition(), lam, lam) == kOne);
  CHECK(hall_coefficient(P({1}), P({1}), P({3})).is_zero());
}

TEST_CASE("Hall coefficients count subgroups") {
  for (int k = 2; k <= 4; ++k) {
    for (const Partition& lam : enumerate_partitions(k)) {
      for (int a = 0; a <= k; ++a) {
        for (const Partition& mu : enumerate_partitions(a)) {
          for (const Partition& nu : enumerate_partitions(k - a)) {
            const Laurent g = hall_coefficient(mu, nu, lam);
            for (unsigned p : {2u, 3u}) CHECK(g.eval(p) == Rational(brute_hall_count(mu, nu, lam, p)));
          }
        }
      }
    }
  }
}

TEST_CASE("Hall expansion matches the Hall-Littlewood product") {
  for (int a = 0; a <= 3; ++a) {
    for (int b = 0; a + b <= 6 && b <= 3; ++b) {
      for (const Partition& mu : enumerate_partitions(a)) {
        for (const Partition& nu : enumerate_partitions(b)) {
          const SymSeries prod = multiply(hl_polynomial(mu, 6), hl_polynomial(nu, 6), a + b);
          std::map<Partition, Laurent> expected;
          for (const auto& [lam, g] : hall_expansion(mu, nu)) {
            // g^lam_{mu nu}(1/t) t^{n(lam) - n(mu) - n(nu)}
            Laurent c = g.t_scaled(-1).shifted(static_cast<int>(lam.n() - mu.n() - nu.n()));
            if (!c.is_zero()) expected[lam] = c;
          }
          CHECK(to_p_basis(prod) == expected);
        }
      }
    }
  }
}

TEST_CASE("identities hold in three variables") {
  for (Identity id : {Identity::kNewHall, Identity::kKawanaka, Identity::kMacident, Identity::kMacHallSum,
                      Identity::kSchurSum}) {
    CAPTURE(identity_name(id));
    const Report r = verify_identity(id, 3, 6);
    CHECK_MESSAGE(r.passed(), r.failure());
    CHECK(verify_identity(id, 2, 0).passed());
  }
}

TEST_CASE("first-degree coefficient of the even-multiplicity identity") {
  const Laurent expected = Laurent::t(-1) - kOne;
  CHECK(identity_lhs(Identity::kNewHall, 3, 2).coeff(P({1})) == expected);
  CHECK(identity_rhs(Identity::kNewHall, 3, 2).coeff(P({1})) == expected);
}

TEST_CASE("a perturbed identity fails at a located coefficient") {
  const Report r = verify_identity(Identity::kNewHallPerturbed, 3, 4);
  CHECK_FALSE(r.passed());
  CHECK(r.failure().find("x^[") != std::string::npos);
}

TEST_CASE("identity names and limits") {
  CHECK(parse_identity("kawanaka") == Identity::kKawanaka);
  CHECK_THROWS_AS(parse_identity("nope"), InvalidArgument);
  CHECK_THROWS(verify_identity(Identity::kNewHall, 2, -1));
  CHECK_THROWS(hl_polynomial(P({1}), symmetrization_cap() + 1));
}
