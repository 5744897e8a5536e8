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

#ifndef GTAU_CLASSCOUNT_HPP
#define GTAU_CLASSCOUNT_HPP

#include <string_view>
#include <vector>

#include "exact.hpp"
#include "interval.hpp"
#include "report.hpp"

namespace gtau {

/// 1 in characteristic 2, else 2. q must be a prime power.
int char_flag(unsigned q);

/// Coefficients t^0..t^N of prod_i (1+t^i)^f / (1 - q t^{2i}).
std::vector<Integer> coset_class_series(unsigned q, int N);
/// Coefficients t^0..t^N of prod_i (1 - t^i) / (1 - q t^i).
std::vector<Integer> gl_class_series(unsigned q, int N);

/// k(GL(n,q) tau), the number of G+ classes in the coset.
Integer coset_class_count(int n, unsigned q);
/// k(GL(n,q)).
Integer gl_class_count(int n, unsigned q);
/// k(G+(n,q)) = k_gl/2 + 3 k_coset/2. Throws InternalError if not integral.
Integer total_class_count(int n, unsigned q);

/// One record with k_coset, k_gl, k_total, the classdouble bound and
/// k_coset / q^{floor(n/2)}.
Report class_count_report(int n, unsigned q);

/// k_coset <= 28 q^{floor(n/2)} (q even) or 23 q^{floor(n/2)} (q odd)
/// for 1 <= n <= n_max.
Report bound_report(int n_max, const std::vector<unsigned>& qs);

enum class Parity { kEven, kOdd };
Parity parse_parity(std::string_view name);

/// Certified enclosure of lim k(GL(2n,q) tau)/q^n (even) or
/// lim k(GL(2n+1,q) tau)/q^n (odd).
Interval asy_limit(unsigned q, Parity parity);

/// Compares k(GL(2m,q) tau)/q^m (or 2m+1) with the limit midpoint;
/// passes when the relative gap is below tolerance.
Report asy_report(unsigned q, Parity parity, int m, const Rational& tolerance);

}  // namespace gtau

#endif  // GTAU_CLASSCOUNT_HPP
