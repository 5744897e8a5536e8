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

#include <set>
#include <vector>

#include "doctest.h"
#include "exact.hpp"
#include "partition.hpp"

using namespace gtau;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

std::set<Partition> as_set(const std::vector<Partition>& v) { return {v.begin(), v.end()}; }

// Partition numbers p(0..12).
constexpr int kPartitionCounts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};

}  // namespace

TEST_CASE("statistics of (5,4,4,1)") {
  const PartitionStats s = partition_stats(P({5, 4, 4, 1}));
  CHECK(s.dual == P({4, 3, 3, 3, 1}));
  CHECK(s.n == 15);
  CHECK(s.o == 2);
  CHECK(s.length == 4);
  CHECK(s.size == 14);
  CHECK(s.multiplicities.at(4) == 2);
  CHECK(s.multiplicities.at(5) == 1);
  CHECK(s.multiplicities.at(1) == 1);
}

TEST_CASE("empty partition") {
  const Partition e;
  CHECK(e.size() == 0);
  CHECK(e.length() == 0);
  CHECK(e.n() == 0);
  CHECK(e.dual() == e);
  CHECK(e.to_string() == "[]");
  CHECK(e.c_poly() == Laurent(1));
}

TEST_CASE("statistics agree with their alternative forms") {
  for (int k = 0; k <= 12; ++k) {
    const auto all = enumerate_partitions(k);
    CHECK(static_cast<int>(all.size()) == kPartitionCounts[k]);
    for (const Partition& lam : all) {
      CAPTURE(lam.to_string());
      CHECK(lam.dual().dual() == lam);
      CHECK(lam.dual().size() == k);
      long n_alt = 0;
      for (int i = 1; i <= lam.length(); ++i) n_alt += static_cast<long>(i - 1) * lam.part(i);
      long n_dual = 0;
      const Partition dual = lam.dual();
      for (int c : dual.parts()) n_dual += static_cast<long>(c) * (c - 1) / 2;
      CHECK(lam.n() == n_alt);
      CHECK(lam.n() == n_dual);
      CHECK((lam.odd_parts() - k) % 2 == 0);
      int from_mult = 0;
      for (const auto& [part, m] : lam.multiplicities()) {
        CHECK(m == lam.multiplicity(part));
        from_mult += part * m;
      }
      CHECK(from_mult == k);
      // Hook lengths: arm + leg + 1 summed over boxes equals n(lam) + n(lam') + |lam|.
      long hooks = 0;
      for (int i = 1; i <= lam.length(); ++i)
        for (int j = 1; j <= lam.part(i); ++j) hooks += lam.arm(i, j) + lam.leg(i, j) + 1;
      CHECK(hooks == lam.n() + lam.dual().n() + k);
    }
  }
}

TEST_CASE("c polynomial") {
  const Laurent t = Laurent::t();
  CHECK(P({1}).c_poly() == Laurent(1) - t);
  CHECK(P({1, 1, 1}).c_poly() == (Laurent(1) - t) * (Laurent(1) - Laurent::t(3)));
  CHECK(P({2}).c_poly() == Laurent(1) - t);
  CHECK(P({1, 1}).c_poly() == Laurent(1) - t);
}

TEST_CASE("constrained enumeration") {
  CHECK(as_set(enumerate_partitions(4, Constraint::kEvenPartsEvenMult)) ==
        std::set<Partition>{P({1, 1, 1, 1}), P({2, 2}), P({3, 1})});
  CHECK(as_set(enumerate_partitions(4, Constraint::kOddPartsEvenMult)) ==
        std::set<Partition>{P({1, 1, 1, 1}), P({2, 2}), P({4}), P({2, 1, 1})});
  CHECK(as_set(enumerate_partitions(4, Constraint::kAllPartsEven)) == std::set<Partition>{P({4}), P({2, 2})});
  CHECK(enumerate_partitions(3, Constraint::kOddPartsEvenMult).empty());
  for (int k = 0; k <= 10; ++k) {
    for (Constraint c : {Constraint::kEvenPartsEvenMult, Constraint::kOddPartsEvenMult, Constraint::kAllPartsEven}) {
      std::set<Partition> filtered;
      for (const Partition& lam : enumerate_partitions(k))
        if (satisfies(lam, c)) filtered.insert(lam);
      CHECK(as_set(enumerate_partitions(k, c)) == filtered);
    }
  }
  CHECK(parse_constraint("all") == Constraint::kAll);
  CHECK_THROWS_AS(parse_constraint("bogus"), InvalidArgument);
}

TEST_CASE("vertical strips") {
  CHECK(as_set(vertical_strip_covers(P({2, 1}), 1)) == std::set<Partition>{P({3, 1}), P({2, 2}), P({2, 1, 1})});
  CHECK(as_set(vertical_strip_covers(Partition(), 3)) == std::set<Partition>{P({1, 1, 1})});
  CHECK(as_set(vertical_strip_covers(P({1}), 0)) == std::set<Partition>{P({1})});
  // Every cover contains mu, adds r boxes, and at most one per row.
  for (int k = 0; k <= 6; ++k) {
    for (const Partition& mu : enumerate_partitions(k)) {
      for (int r = 0; r <= 4; ++r) {
        for (const Partition& lam : vertical_strip_covers(mu, r)) {
          CHECK(lam.contains(mu));
          CHECK(lam.size() == k + r);
          for (int i = 1; i <= lam.length(); ++i) CHECK(lam.part(i) - mu.part(i) <= 1);
        }
      }
    }
  }
}

TEST_CASE("horizontal strip removals are the duals of vertical strip covers") {
  for (int k = 1; k <= 7; ++k) {
    for (const Partition& lam : enumerate_partitions(k)) {
      for (const Partition& mu : horizontal_strip_removals(lam)) {
        CHECK(lam.contains(mu));
        const auto covers = vertical_strip_covers(mu.dual(), k - mu.size());
        CHECK(as_set(covers).count(lam.dual()) == 1);
      }
    }
  }
}

TEST_CASE("text form") {
  CHECK(P({5, 4, 4, 1}).to_string() == "[5,4,4,1]");
  CHECK(Partition::parse("[5,4,4,1]") == P({5, 4, 4, 1}));
  CHECK(Partition::parse("[]") == Partition());
  CHECK_THROWS_AS(Partition::parse("[1,2]"), InvalidArgument);
  CHECK_THROWS_AS(Partition::parse("[0]"), InvalidArgument);
  CHECK_THROWS_AS(Partition::parse("3,1"), InvalidArgument);
  for (const Partition& lam : enumerate_partitions(7)) CHECK(Partition::parse(lam.to_string()) == lam);
}
