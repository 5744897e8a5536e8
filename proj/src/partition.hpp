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

#ifndef GTAU_PARTITION_HPP
#define GTAU_PARTITION_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "exact.hpp"

namespace gtau {

/// Integer partition stored as weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  /// Sorts the parts and drops zeros; negative parts are rejected.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  int size() const;  // |lambda|
  int length() const { return static_cast<int>(parts_.size()); }
  /// lambda_i, 1-based; 0 past the end.
  int part(int i) const;

  Partition dual() const;
  /// m_i(lambda).
  int multiplicity(int i) const;
  /// i -> m_i for parts present.
  std::map<int, int> multiplicities() const;

  /// n(lambda) = sum_i (i-1) lambda_i.
  long n() const;
  /// Number of odd parts.
  int odd_parts() const;

  /// Arm and leg of box (i, j), 1-based row and column.
  int arm(int i, int j) const;
  int leg(int i, int j) const;

  bool even_parts_even_mult() const;
  bool odd_parts_even_mult() const;
  bool all_parts_even() const;

  /// c_lambda(t) = prod over boxes with a(s) = 0 and l(s) even of (1 - t^{l(s)+1}).
  Laurent c_poly() const;

  bool contains(const Partition& mu) const;

  std::string to_string() const;  // "[5,4,4,1]", "[]"
  static Partition parse(std::string_view text);

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
  /// Size first, then reverse lexicographic (larger parts first).
  friend bool operator<(const Partition& a, const Partition& b);

 private:
  std::vector<int> parts_;
};

struct PartitionStats {
  Partition dual;
  std::map<int, int> multiplicities;
  long n = 0;
  int o = 0;
  int length = 0;
  int size = 0;
};

PartitionStats partition_stats(const Partition& lambda);

enum class Constraint { kAll, kEvenPartsEvenMult, kOddPartsEvenMult, kAllPartsEven };

Constraint parse_constraint(std::string_view name);
bool satisfies(const Partition& lambda, Constraint c);

/// Partitions of n satisfying c, reverse lexicographic order.
std::vector<Partition> enumerate_partitions(int n, Constraint c = Constraint::kAll);

/// All lambda containing mu with lambda/mu a vertical strip of size r.
std::vector<Partition> vertical_strip_covers(const Partition& mu, int r);

/// All mu contained in lambda with lambda/mu a horizontal strip.
std::vector<Partition> horizontal_strip_removals(const Partition& lambda);

}  // namespace gtau

#endif  // GTAU_PARTITION_HPP
