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
#include <random>
#include <set>
#include <vector>

#include "classdata.hpp"
#include "doctest.h"
#include "exact.hpp"
#include "matrix.hpp"
#include "poly.hpp"

using namespace gtau;

namespace {

Poly Pol(unsigned q, std::vector<Elem> c) { return Poly(Field::get(q), std::move(c)); }
Partition Par(std::vector<int> parts) { return Partition(std::move(parts)); }

std::multiset<Integer> class_sizes(int n, unsigned q, ClassPredicate pred = ClassPredicate::kAll) {
  std::multiset<Integer> out;
  for (const ClassData& c : enumerate_class_data(n, q, pred)) out.insert(class_size(c));
  return out;
}

}  // namespace

TEST_CASE("group orders") {
  CHECK(gl_order(2, 2) == 6);
  CHECK(sl_order(2, 3) == 24);
  CHECK(sp_order(4, 2) == 720);
  CHECK(enumerate_group(GroupKind::kGL, 2, 2).size() == 6);
  CHECK(enumerate_group(GroupKind::kSL, 2, 3).size() == 24);
  CHECK(enumerate_group(GroupKind::kSp, 4, 2).size() == 720);
  for (unsigned q : {2u, 3u, 4u}) {
    for (int n = 1; n <= 3; ++n) {
      if (gl_order(n, q) > 200000) continue;
      CHECK(Integer(static_cast<unsigned long>(enumerate_group(GroupKind::kGL, n, q).size())) == gl_order(n, q));
      CHECK(Integer(static_cast<unsigned long>(enumerate_group(GroupKind::kSL, n, q).size())) == sl_order(n, q));
    }
  }
  CHECK(Integer(static_cast<unsigned long>(enumerate_group(GroupKind::kSp, 2, 5).size())) == sp_order(2, 5));
  CHECK_THROWS_AS(enumerate_group(GroupKind::kSp, 3, 2), InvalidArgument);
}

TEST_CASE("enumerated elements are distinct and lie in the group") {
  for (GroupKind k : {GroupKind::kGL, GroupKind::kSL}) {
    const auto all = enumerate_group(k, 3, 2);
    CHECK(std::set<Matrix>(all.begin(), all.end()).size() == all.size());
    for (const Matrix& g : all) {
      CHECK(g.invertible());
      if (k == GroupKind::kSL) CHECK(g.det() == 1);
    }
  }
  const auto f3 = Field::get(3);
  const Matrix J = Matrix::standard_alternating(f3, 4);
  bool preserves = true;
  for_each_element(GroupKind::kSp, 4, 3, [&](const Matrix& g) { preserves &= g.transpose() * J * g == J; });
  CHECK(preserves);
}

TEST_CASE("symplectic counts do not depend on the alternating form") {
  const auto f = Field::get(3);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 3; ++trial) {
    const Matrix a = random_gl(f, 4, rng);
    const Matrix form = a.transpose() * Matrix::standard_alternating(f, 4) * a;
    long count = 0;
    bool preserves = true;
    for_each_element(
        GroupKind::kSp, 4, 3,
        [&](const Matrix& g) {
          ++count;
          preserves &= g.transpose() * form * g == form;
        },
        {}, form);
    CHECK(Integer(count) == sp_order(4, 3));
    CHECK(preserves);
  }
}

TEST_CASE("unitary order") {
  // Independent product: q^{n(n-1)/2} prod_i (q^i - (-1)^i).
  for (int n = 1; n <= 6; ++n) {
    for (long q : {2L, 3L, 4L, 5L, 7L, 8L, 9L}) {
      Integer expected = ipow(q, static_cast<unsigned long>(n * (n - 1) / 2));
      for (int i = 1; i <= n; ++i) expected *= ipow(q, static_cast<unsigned long>(i)) - (i % 2 ? -1 : 1);
      CHECK(unitary_order(n, q) == expected);
      CHECK(unitary_order(n, q) > 0);
      const Integer signed_gl = gl_order(n, Integer(-q)) * (n % 2 ? -1 : 1);
      CHECK(unitary_order(n, q) == signed_gl);
    }
  }
}

TEST_CASE("rational canonical form examples") {
  const auto f2 = Field::get(2);
  const ClassData id = classify_rcf(Matrix::identity(f2, 2));
  CHECK(id.entries().size() == 1);
  CHECK(id.at(Pol(2, {1, 1})) == Par({1, 1}));

  const Poly cubic = Pol(2, {1, 1, 1});
  const ClassData c = classify_rcf(companion(cubic));
  CHECK(c.entries().size() == 1);
  CHECK(c.at(cubic) == Par({1}));

  const auto f3 = Field::get(3);
  const ClassData j = classify_rcf(Matrix::from_rows(f3, {{1, 1}, {0, 1}}));
  CHECK(j.entries().size() == 1);
  CHECK(j.unipotent_part() == Par({2}));

  CHECK_THROWS_AS(classify_rcf(Matrix::from_rows(f3, {{1, 1}, {1, 1}})), InvalidArgument);
}

TEST_CASE("centralizer size examples") {
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    const auto f = Field::get(q);
    const Poly z_minus_1 = Poly::linear(f, 1);
    CHECK(centralizer_size(ClassData(q, {{z_minus_1, Par({1, 1})}})) == gl_order(2, q));
    CHECK(centralizer_size(ClassData(q, {{z_minus_1, Par({2})}})) == Integer(q) * q - q);
  }
  CHECK(centralizer_size(ClassData(2, {{Pol(2, {1, 1, 1}), Par({1})}})) == 3);
}

TEST_CASE("class data enumeration examples") {
  CHECK(class_sizes(2, 2) == std::multiset<Integer>{1, 3, 2});
  CHECK(enumerate_class_data(2, 3).size() == 8);
  CHECK(enumerate_class_data(2, 3, ClassPredicate::kReal).size() == 6);
  for (const ClassData& c : enumerate_class_data(3, 3, ClassPredicate::kRegularSemisimple)) {
    CHECK(c.is_regular_semisimple());
    CHECK(classify_rcf(class_representative(c)).is_regular_semisimple());
  }
  for (unsigned q : {2u, 3u, 4u, 5u}) CHECK(Integer(static_cast<unsigned long>(enumerate_class_data(2, q).size())) == Integer(q) * q - 1);
}

TEST_CASE("class equation and elementwise classification") {
  const std::vector<std::pair<int, unsigned>> cases = {{2, 2}, {2, 3}, {3, 2}, {2, 4}};
  for (const auto& [n, q] : cases) {
    CAPTURE(n);
    CAPTURE(q);
    Integer total = 0;
    std::map<ClassData, Integer> expected;
    for (const ClassData& c : enumerate_class_data(n, q)) {
      expected[c] = class_size(c);
      total += class_size(c);
      CHECK(classify_rcf(class_representative(c)) == c);
    }
    CHECK(total == gl_order(n, q));
    std::map<ClassData, Integer> seen;
    for_each_element(GroupKind::kGL, n, q, [&](const Matrix& g) { seen[classify_rcf(g)] += 1; });
    CHECK(seen == expected);
  }
}

TEST_CASE("brute centralizers agree with the formula") {
  for (const auto& [n, q] : std::vector<std::pair<int, unsigned>>{{2, 2}, {2, 3}, {3, 2}}) {
    const auto group = enumerate_group(GroupKind::kGL, n, q);
    for (const ClassData& c : enumerate_class_data(n, q)) {
      const Matrix h = class_representative(c);
      long commuting = 0;
      for (const Matrix& a : group)
        if (a * h == h * a) ++commuting;
      CHECK(Integer(commuting) == centralizer_size(c));
    }
  }
}

TEST_CASE("classification is invariant under conjugation and transpose") {
  std::mt19937_64 rng(2026);
  for (const auto& [n, q] : std::vector<std::pair<int, unsigned>>{{3, 2}, {3, 3}, {4, 2}, {4, 3}, {5, 2}}) {
    const auto f = Field::get(q);
    for (int trial = 0; trial < 100; ++trial) {
      const Matrix a = random_gl(f, n, rng);
      const Matrix p = random_gl(f, n, rng);
      const ClassData c = classify_rcf(a);
      CHECK(c.n() == n);
      CHECK(classify_rcf(p * a * p.inverse()) == c);
      CHECK(classify_rcf(a.transpose()) == c);
      CHECK(classify_rcf(class_representative(c)) == c);
    }
  }
}

TEST_CASE("class data text form") {
  const ClassData c = ClassData::parse("n=6; GF(2):1,1:[2,2]; GF(2):1,1,1:[1]");
  CHECK(c.n() == 6);
  CHECK(ClassData::parse(c.to_string()) == c);
  CHECK(c.to_string() == "n=6; GF(2):1,1:[2,2]; GF(2):1,1,1:[1]");
  // Declared size must match the entries.
  CHECK_THROWS_AS(ClassData::parse("n=4; GF(2):1,1:[2,2]; GF(2):1,1,1:[1]"), InvalidArgument);
  const ClassData d = ClassData::parse("n=4; GF(2):1,1:[1,1]; GF(2):1,1,1:[1]");
  CHECK(d.n() == 4);
  // Order of entries in the input is irrelevant; output is canonical.
  CHECK(ClassData::parse("n=4; GF(2):1,1,1:[1]; GF(2):1,1:[1,1]") == d);
  CHECK_THROWS_AS(ClassData::parse("n=1; GF(2):0,1:[1]"), InvalidArgument);   // key z
  CHECK_THROWS_AS(ClassData::parse("n=2; GF(2):1,0,1:[1]"), InvalidArgument); // reducible
  for (unsigned q : {2u, 3u, 4u})
    for (const ClassData& e : enumerate_class_data(3, q)) CHECK(ClassData::parse(e.to_string()) == e);
}

TEST_CASE("real classes are closed under inversion") {
  for (unsigned q : {2u, 3u, 5u}) {
    for (const ClassData& c : enumerate_class_data(3, q)) {
      const ClassData inv = classify_rcf(class_representative(c).inverse());
      CHECK(c.is_real() == (inv == c));
    }
  }
}

TEST_CASE("matrix codec round-trips") {
  const auto f = Field::get(3);
  const MatrixCodec codec(f, 2);
  CHECK(codec.space() == 81);
  for (std::uint64_t code = 0; code < codec.space(); ++code) CHECK(codec.encode(codec.decode(code)) == code);
}

TEST_CASE("enumeration cap") {
  const std::uint64_t saved = enumeration_cap();
  set_enumeration_cap(100);
  CHECK_THROWS_AS(require_enumerable(GroupKind::kGL, 3, 2), CapExceeded);
  CHECK_NOTHROW(require_enumerable(GroupKind::kGL, 2, 3));
  set_enumeration_cap(saved);
}
