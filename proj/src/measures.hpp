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

#ifndef GTAU_MEASURES_HPP
#define GTAU_MEASURES_HPP

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "exact.hpp"
#include "interval.hpp"
#include "partition.hpp"
#include "report.hpp"

namespace gtau {

enum class Family { kSp, kOEven, kOOdd };
Family parse_family(std::string_view name);  // "sp", "o-even", "o-odd"
std::string family_name(Family f);

/// M_{Sp,u}, M_{O,u,even} or M_{O,u,odd} for 0 < u <= 1 and q >= 2.
struct PartitionMeasure {
  PartitionMeasure(Family family, Rational u, unsigned q);
  Family family;
  Rational u;
  unsigned q;
};

bool in_support(const PartitionMeasure& m, const Partition& lambda);
/// The lambda-dependent factor (u-power over the unipotent weight); 0 off support.
Rational measure_weight(const PartitionMeasure& m, const Partition& lambda);
/// Certified enclosure of prod_{i>=1} (1 - u^2/q^{2i-1}).
Interval measure_prefactor(const PartitionMeasure& m);
Interval measure_mass(const PartitionMeasure& m, const Partition& lambda);

/// Sum of measure_weight over |lambda| = k, in closed form
/// u^{k or k-1} / (q^{floor(k/2)} (1-1/q^2)...(1-1/q^{2 floor(k/2)})) on the support parity.
Rational size_weight(const PartitionMeasure& m, int k);
/// Upper bound on the total mass of sizes above cap.
Rational tail_bound(const PartitionMeasure& m, int cap);

/// Partial sum over |lambda| <= cap plus [0, tail]. Must contain 1.
Interval normalization_interval(const PartitionMeasure& m, int cap);
/// The interval, its width, and exact per-size agreement of the enumerated
/// weights with size_weight.
Report normalization_check(const PartitionMeasure& m, int cap);

/// Exact inverse-CDF sampler conditioned on |lambda| <= cap: the size is
/// drawn first, then the partition within the size.
class PartitionSampler {
 public:
  /// Throws InvalidArgument when the tail beyond cap may exceed 1e-9.
  PartitionSampler(const PartitionMeasure& m, int cap);
  /// Smallest cap whose tail bound is below 1e-9.
  static int default_cap(const PartitionMeasure& m);

  Partition sample(std::mt19937_64& rng);
  int cap() const { return cap_; }

 private:
  const std::vector<std::pair<Partition, Rational>>& partitions_of(int k);

  PartitionMeasure m_;
  int cap_;
  std::vector<Rational> size_cdf_;
  std::map<int, std::vector<std::pair<Partition, Rational>>> by_size_;
};

/// Draws trials partitions with the default cap and tabulates sizes <= 4
/// against the exact masses; fails when some |z| exceeds 6.
Report sample_report(const PartitionMeasure& m, long trials, std::uint64_t seed);

/// 1 - u^2 against the product over z +- 1, self-conjugate phi and
/// conjugate pairs, as exact u-series to degree trunc.
Report verify_product_identity(unsigned q, int trunc);

/// Exact distribution of lambda_{z-1}(gg^tau) for g uniform in GL(n, q).
std::map<Partition, Rational> finite_unipotent_distribution(int n, unsigned q);

/// Samples g uniform in GL(n, q) and compares the law of lambda_{z-1}(gg^tau)
/// on sizes <= 4 with M_{O,1,even/odd}.
Report empirical_limit_compare(int n, unsigned q, long trials, std::uint64_t seed);

}  // namespace gtau

#endif  // GTAU_MEASURES_HPP
