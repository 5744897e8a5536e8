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

#ifndef GTAU_QSERIES_HPP
#define GTAU_QSERIES_HPP

#include <string_view>

#include "exact.hpp"
#include "interval.hpp"
#include "report.hpp"

namespace gtau {

/// (1/q)_a = prod_{i=1..a} (1 - q^{-i}).
Rational q_pochhammer(unsigned a, const Rational& q);
/// Gaussian binomial [n choose m] evaluated at q.
Rational q_binomial(unsigned n, unsigned m, const Rational& q);

/// (1/q)_a as a Laurent polynomial in the indeterminate q (the "t" slot).
Laurent pochhammer_inv(unsigned a);
/// Gaussian binomial [n choose m]_t as a polynomial in t.
Laurent t_binomial(unsigned n, unsigned m);
/// prod_{i=1..a} (1 - t^i).
Laurent t_factorial(unsigned a);

enum class QSum { kEuler, kQs1, kQs2, kQs3 };
QSum parse_qsum(std::string_view name);

/// Symbolic verification for every n <= n_max. For kEuler, n_max is the
/// u-degree and the check runs as a bivariate series in u and x = 1/q.
Report verify_qsum(QSum kind, int n_max);

/// Left side of qseries1 at n as a Laurent polynomial in q.
Laurent qs1_lhs(unsigned n);
Laurent qs1_rhs(unsigned n);
Laurent qs2_lhs(unsigned n);
Laurent qs2_rhs(unsigned n);
Laurent qs3_lhs(unsigned n);
Laurent qs3_rhs(unsigned n);

struct PentagonalBounds {
  Rational lower;  // seven-term pentagonal truncation
  Interval value;  // certified enclosure of prod_{i>=1} (1 - q^{-i})
  Rational upper;  // 1 - 1/q
  Rational np0;    // 1 - 1/q - 1/q^2
};

/// Requires q^2 >= 2 and precision >= 1.
PentagonalBounds pentagonal_bounds(const Rational& q, int precision);

/// Certified enclosure of prod_{i>=start, step} (1 - a q^{-i}) for 0 < a <= 1
/// and q >= 2, using |log(1-x)| <= 2x on the tail past `terms` factors.
Interval certified_product(const Rational& a, const Rational& q, int start, int step, int terms);

}  // namespace gtau

#endif  // GTAU_QSERIES_HPP
