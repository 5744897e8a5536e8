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

// Brute-force ground truth over small groups. Nothing in this file uses the
// closed forms except to compare against them.

#ifndef GTAU_ORACLE_HPP
#define GTAU_ORACLE_HPP

#include <map>
#include <set>
#include <vector>

#include "classdata.hpp"
#include "exact.hpp"
#include "matrix.hpp"
#include "partition.hpp"
#include "report.hpp"

namespace gtau {

/// Counts of g in GL(n, q) by the class of gg^tau.
struct Histogram {
  int n = 0;
  unsigned q = 0;
  std::map<ClassData, Integer> counts;
  /// Distinct values of |{g : gg^tau = h}| over the h in each class.
  std::map<ClassData, std::set<Integer>> per_element;
  Integer total;
};

/// One pass over GL(n, q), split across threads by first-row ranges.
Histogram brute_histogram(int n, unsigned q);
/// Every real class: brute total against prob_ggtau |GL| and per-element
/// counts against count_solutions; support and total.
Report histogram_report(const Histogram& h);

/// |{g in GL(n, q) : gg^tau = 1}| by enumeration.
Integer brute_identity_count(int n, unsigned q);
Report gow_macdonald_report(int n, unsigned q);

struct Orbit {
  Matrix representative;
  Integer size;
  Integer stabilizer;  // |acting group| / size
};

/// Orbits of GL(n, q) or SL(n, q) on GL(n, q) under a o g = a g a'.
struct OrbitReport {
  GroupKind kind = GroupKind::kGL;
  int n = 0;
  unsigned q = 0;
  Integer group_order;
  std::vector<Orbit> orbits;  // ordered by representative code
};

/// Breadth-first closure under transvections (and a diagonal generator for
/// GL). Requires q^{n^2} <= 2^26.
OrbitReport brute_congruence_orbits(GroupKind kind, int n, unsigned q);
/// Orbit-stabilizer and size-sum invariants; stabilizers are recomputed by
/// brute_stabilizer when |GL| <= 25000.
Report orbit_report(const OrbitReport& r);

/// |O_g| = |{a in GL : a g a' = g}|, optionally with the elements.
Integer brute_stabilizer(const Matrix& g, std::vector<Matrix>* elements = nullptr);

/// Smallest |O_g| over GL(n, q) against min_centralizer_bound.
Report min_stabilizer_report(int n, unsigned q);

/// Splitting of GL congruence orbits into SL orbits on det slices: one
/// SL orbit iff O_g has an element of determinant -1. n odd: no orbit
/// splits. n even: fewer than twice as many SL orbits as GL orbits on
/// each slice.
Report sl_orbit_report(int n, unsigned q);

/// Number of conjugacy classes of GL(n, q) extended by tau, by orbit
/// closure on pairs (g, 0) ~ g and (g, 1) ~ g tau.
Integer brute_total_class_count(int n, unsigned q);
Report total_class_report(int n, unsigned q);

struct SpStats {
  int n = 0;
  unsigned q = 0;
  std::map<ClassData, Integer> counts;
  Integer order;
  Integer regular_semisimple;
};

SpStats brute_sp_stats(int n, unsigned q);
/// Every class against prob_sp_class, and every unipotent class against
/// prob_unipotent(kSp).
Report sp_stats_report(const SpStats& s);
/// rs mass of gg^tau over GL(n, q) against the rs proportion of
/// Sp(2 floor(n/2), q).
Report regss_report(int n, unsigned q);

/// Solution counts, C_G(h)-orbits of solutions, and congruence of g, g'
/// and g^{-1}, for every h = gg^tau with no eigenvalue +-1 (n even) or
/// with 1 a simple eigenvalue and no eigenvalue -1 (n odd).
Report verify_orbit_structure(int n, unsigned q);

/// Number of subgroups of type mu with quotient of type nu in the abelian
/// p-group of type lambda.
Integer brute_hall_count(const Partition& mu, const Partition& nu, const Partition& lambda, unsigned p);
/// hall_coefficient evaluated at p against subgroup counting, for all
/// |lambda| <= max_size.
Report hall_brute_report(int max_size, const std::vector<unsigned>& primes);

}  // namespace gtau

#endif  // GTAU_ORACLE_HPP
