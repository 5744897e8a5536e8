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

#ifndef GTAU_SYMFUNC_HPP
#define GTAU_SYMFUNC_HPP

#include <map>
#include <string>
#include <string_view>

#include "exact.hpp"
#include "partition.hpp"
#include "report.hpp"

namespace gtau {

/// Symmetric polynomial in m variables truncated at total degree maxdeg,
/// stored in the monomial basis: the coefficient of m_alpha (equivalently of
/// x^alpha for the sorted exponent vector alpha).
class SymSeries {
 public:
  using Terms = std::map<Partition, Laurent>;

  SymSeries(int m, int maxdeg);

  int vars() const { return m_; }
  int maxdeg() const { return maxdeg_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Laurent coeff(const Partition& alpha) const;
  /// Adds c * m_alpha; silently drops terms beyond maxdeg or with more than
  /// m parts.
  void add_term(const Partition& alpha, const Laurent& c);

  SymSeries& operator+=(const SymSeries& o);
  SymSeries& operator-=(const SymSeries& o);
  SymSeries& operator*=(const Laurent& c);
  friend bool operator==(const SymSeries& a, const SymSeries& b) { return a.terms_ == b.terms_; }

  /// Substitutes a value for t in every coefficient.
  SymSeries eval_t(const Rational& t) const;

  std::string to_string() const;

 private:
  int m_;
  int maxdeg_;
  Terms terms_;
};

/// Product truncated at total degree maxdeg.
SymSeries multiply(const SymSeries& a, const SymSeries& b, int maxdeg);

/// e_r and h_r in m variables.
SymSeries elementary(int r, int m);
SymSeries complete(int r, int m);
/// Monomial symmetric polynomial m_lambda.
SymSeries monomial_sym(const Partition& lambda, int m);
/// Schur polynomial by the Jacobi-Trudi determinant (h or e form, whichever
/// is smaller).
SymSeries schur(const Partition& lambda, int m);

/// Upper bound on m for literal symmetrization over S_m (default 6).
int symmetrization_cap();
void set_symmetrization_cap(int m);

/// P_lambda(x_1..x_m; t) by symmetrization over S_m, exact division by the
/// Vandermonde determinant and by v_lambda(t). Zero when l(lambda) > m.
SymSeries hl_polynomial(const Partition& lambda, int m);

/// P_lambda by the branching rule
/// P_lambda(x_1..x_n) = sum_mu psi_{lambda/mu}(t) x_n^{|lambda/mu|} P_mu(x_1..x_{n-1}).
/// No cap; used where m! is too large.
SymSeries hl_polynomial_branching(const Partition& lambda, int m);

enum class HLRoute { kSymmetrize, kBranching };

/// Expansion of a symmetric polynomial in the P basis by back-substitution
/// (lexicographically largest monomial first).
std::map<Partition, Laurent> to_p_basis(const SymSeries& f, HLRoute route = HLRoute::kSymmetrize);

/// Pieri coefficients of P_mu e_r.
std::map<Partition, Laurent> pieri_expand(const Partition& mu, int r);

/// g^lambda_{mu,nu}(p) as a polynomial in p (Laurent "t" slot holds p).
/// Extracted from the P-basis expansion of t^{n(mu)} P_mu t^{n(nu)} P_nu.
Laurent hall_coefficient(const Partition& mu, const Partition& nu, const Partition& lambda);

/// All nonzero g^lambda_{mu,nu}(p) for fixed mu, nu.
std::map<Partition, Laurent> hall_expansion(const Partition& mu, const Partition& nu);

enum class Identity { kNewHall, kKawanaka, kMacident, kMacHallSum, kSchurSum, kNewHallPerturbed };
Identity parse_identity(std::string_view name);
std::string identity_name(Identity id);

/// Left and right sides of an identity in m variables to total degree D.
SymSeries identity_lhs(Identity id, int m, int D);
SymSeries identity_rhs(Identity id, int m, int D);

/// Exact comparison; the report carries the first differing monomial.
Report verify_identity(Identity id, int m, int D);

}  // namespace gtau

#endif  // GTAU_SYMFUNC_HPP
