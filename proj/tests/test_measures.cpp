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
#include <vector>

#include "doctest.h"
#include "exact.hpp"
#include "interval.hpp"
#include "measures.hpp"
#include "oracle.hpp"
#include "partition.hpp"

using namespace gtau;

namespace {

Partition Par(std::vector<int> parts) { return Partition(std::move(parts)); }

}  // namespace

TEST_CASE("measure values") {
  const PartitionMeasure oe(Family::kOEven, 1, 2);
  CHECK(measure_weight(oe, Partition()) == 1);
  const Interval empty_mass = measure_mass(oe, Partition());
  CHECK(empty_mass.lo == measure_prefactor(oe).lo);
  CHECK(empty_mass.hi == measure_prefactor(oe).hi);
  CHECK_FALSE(in_support(oe, Par({1})));
  CHECK(measure_weight(oe, Par({1})) == 0);
  CHECK(measure_mass(oe, Par({1})).hi == 0);

  for (long q : {2L, 3L, 5L}) {
    const Rational u(1, 2);
    const PartitionMeasure sp(Family::kSp, u, static_cast<unsigned>(q));
    CHECK(measure_weight(sp, Par({1, 1})) == u * u / (q * q * q - q));
  }
  CHECK(parse_family("o-odd") == Family::kOOdd);
  CHECK(family_name(Family::kSp) == "sp");
  CHECK_THROWS_AS(parse_family("u"), InvalidArgument);
  CHECK_THROWS_AS(PartitionMeasure(Family::kSp, 2, 2), InvalidArgument);
  CHECK_THROWS_AS(PartitionMeasure(Family::kSp, 0, 2), InvalidArgument);
}

TEST_CASE("size weights are sums of partition weights") {
  for (Family f : {Family::kSp, Family::kOEven, Family::kOOdd}) {
    for (unsigned q : {2u, 3u}) {
      for (const Rational& u : {Rational(1), Rational(1, 3)}) {
        const PartitionMeasure m(f, u, q);
        for (int k = 0; k <= 10; ++k) {
          Rational total = 0;
          for (const Partition& lam : enumerate_partitions(k)) {
            const Rational w = measure_weight(m, lam);
            CHECK(in_support(m, lam) == (w != 0));
            total += w;
          }
          CHECK(total == size_weight(m, k));
        }
      }
    }
  }
}

TEST_CASE("normalization intervals contain one") {
  struct Case {
    Family f;
    Rational u;
    unsigned q;
    int cap;
    Rational width;
  };
  const std::vector<Case> cases = {
      {Family::kSp, Rational(1, 2), 2, 20, Rational(1, 1000000)},
      {Family::kOEven, 1, 2, 30, Rational(1, 10000)},
      {Family::kSp, 1, 2, 30, Rational(1, 10000)},
      {Family::kOOdd, 1, 3, 30, Rational(1, 10000)},
  };
  for (const Case& c : cases) {
    const PartitionMeasure m(c.f, c.u, c.q);
    const Interval iv = normalization_interval(m, c.cap);
    CHECK(iv.contains(1));
    CHECK(iv.width() < c.width);
    CHECK(normalization_check(m, c.cap).passed());
  }
  // Tiny u: the empty partition alone carries almost all the mass.
  const PartitionMeasure tiny(Family::kOEven, Rational(1, 1000), 2);
  CHECK(measure_mass(tiny, Partition()).lo > Rational(999, 1000));
}

TEST_CASE("sampler") {
  const PartitionMeasure tiny(Family::kOEven, Rational(1, 1000), 2);
  PartitionSampler s(tiny, PartitionSampler::default_cap(tiny));
  std::mt19937_64 rng(5);
  int empty = 0;
  for (int i = 0; i < 10000; ++i) empty += s.sample(rng).empty() ? 1 : 0;
  CHECK(empty >= 9990);

  const PartitionMeasure m(Family::kOEven, 1, 2);
  PartitionSampler a(m, PartitionSampler::default_cap(m));
  PartitionSampler b(m, PartitionSampler::default_cap(m));
  std::mt19937_64 ra(42), rb(42);
  for (int i = 0; i < 200; ++i) {
    const Partition x = a.sample(ra);
    CHECK(x == b.sample(rb));
    CHECK(in_support(m, x));
    CHECK(x.size() <= a.cap());
  }
  CHECK_THROWS_AS(PartitionSampler(m, 2), InvalidArgument);
}

TEST_CASE("sample frequencies match exact masses") {
  const Report r = sample_report(PartitionMeasure(Family::kOEven, 1, 2), 100000, 1);
  CHECK_MESSAGE(r.passed(), r.failure());
  CHECK(sample_report(PartitionMeasure(Family::kSp, Rational(1, 2), 3), 50000, 9).passed());
  // Same seed, same report.
  CHECK(sample_report(PartitionMeasure(Family::kOOdd, 1, 3), 20000, 3).json_lines() ==
        sample_report(PartitionMeasure(Family::kOOdd, 1, 3), 20000, 3).json_lines());
}

TEST_CASE("product identity") {
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    CHECK(verify_product_identity(q, 8).passed());
    CHECK(verify_product_identity(q, 1).passed());
  }
}

TEST_CASE("finite unipotent distribution") {
  for (unsigned q : {2u, 3u}) {
    for (int n = 1; n <= 6; ++n) {
      Rational total = 0;
      for (const auto& [mu, p] : finite_unipotent_distribution(n, q)) {
        CHECK(p > 0);
        CHECK((n - mu.size()) % 2 == 0);
        total += p;
      }
      CHECK(total == 1);
    }
  }
  // Independent route: enumerate GL(n, q) and tabulate lambda_{z-1}(gg^tau).
  for (const auto& [n, q] : std::vector<std::pair<int, unsigned>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
    const Histogram h = brute_histogram(n, q);
    std::map<Partition, Rational> brute;
    for (const auto& [c, count] : h.counts) brute[c.unipotent_part()] += fraction(count, h.total);
    CHECK(finite_unipotent_distribution(n, q) == brute);
  }
}

TEST_CASE("random matrices approach the limiting law") {
  const Report r = empirical_limit_compare(10, 2, 100000, 12345);
  CHECK_MESSAGE(r.passed(), r.failure());
  CHECK(empirical_limit_compare(11, 2, 20000, 7).passed());
}
