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

#ifndef GTAU_FORMULAS_HPP
#define GTAU_FORMULAS_HPP

#include <string_view>
#include <vector>

#include "classdata.hpp"
#include "exact.hpp"
#include "interval.hpp"
#include "partition.hpp"
#include "report.hpp"

namespace gtau {

/// q^{n(lambda) + |lambda|/2 + sign o(lambda)/2} prod_i prod_{j <= m_i/2} (1 - q^{-2j}),
/// sign = -1 or +1. Exact for any rational q > 1.
Rational unipotent_weight(const Partition& lambda, const Rational& q, int sign);

/// B(phi, lambda) for phi = z - 1, z + 1 (odd characteristic) or a
/// self-conjugate phi. Non-self-conjugate phi must go through B_pair.
Rational B_factor(const Poly& phi, const Partition& lambda);
/// B(phi, lambda) B(phi-bar, lambda) for non-self-conjugate phi.
Rational B_pair(const Poly& phi, const Partition& lambda);

/// Chance that gg^tau has class data c, g uniform in GL(n, q).
Rational prob_ggtau(const ClassData& c);
/// Number of g with gg^tau = h for a fixed h in class c.
Integer count_solutions(const ClassData& c);

enum class UnipotentTarget { kGLggtau, kSp };
UnipotentTarget parse_unipotent_target(std::string_view name);
/// Chance that gg^tau (g in GL(|mu|, q)) or a uniform element of Sp(|mu|, q)
/// is unipotent of type mu. Only depends on q as a rational function.
Rational prob_unipotent(const Partition& mu, const Rational& q, UnipotentTarget target);

/// Chance that a uniform element of Sp(n, q) has GL(n, q) class data c.
Rational prob_sp_class(const ClassData& c);

/// prod_{i=1..n} (q^i - 1 if i odd, q^i if i even): the number of g with gg^tau = 1.
Integer gow_macdonald_count(int n, const Integer& q);

/// Enclosure of (1-1/q^2-1/q^4)^2 q^{floor(n/2)} ((1-1/q)/(4e log_q n))^{1/2}.
/// The lower endpoint is the certified lower bound.
Interval min_centralizer_bound(int n, unsigned q);

/// Both unipotent centralizer inequalities for every admissible lambda with
/// |lambda| <= max_size and every q in qs.
Report verify_centbounduni(int max_size, const std::vector<unsigned>& qs);

}  // namespace gtau

#endif  // GTAU_FORMULAS_HPP
