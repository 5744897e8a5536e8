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

#ifndef GTAU_POLY_HPP
#define GTAU_POLY_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "exact.hpp"
#include "field.hpp"

namespace gtau {

/// Polynomial in z over F_q, coefficients ascending, no trailing zeros (the
/// zero polynomial has no coefficients).
class Poly {
 public:
  Poly() = default;
  Poly(FieldPtr f, std::vector<Elem> coeffs);

  static Poly zero(FieldPtr f) { return {std::move(f), {}}; }
  static Poly constant(FieldPtr f, Elem c);
  static Poly z(FieldPtr f);  // the monomial z
  /// z - c
  static Poly linear(FieldPtr f, Elem c);
  static Poly monomial(FieldPtr f, Elem c, int degree);

  const FieldPtr& field_ptr() const { return field_; }
  const Field& field() const { return *field_; }
  const std::vector<Elem>& coeffs() const { return c_; }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  Elem coeff(int i) const;
  Elem constant_term() const { return coeff(0); }
  Elem leading() const { return c_.empty() ? Elem{0} : c_.back(); }

  Poly monic() const;
  Poly derivative() const;
  Elem eval(Elem x) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(Elem c) const;

  /// Quotient and remainder; b must be nonzero.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
  friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

  /// Monic gcd (zero if both inputs are zero).
  static Poly gcd(const Poly& a, const Poly& b);
  /// base^e mod m.
  static Poly powmod(const Poly& base, const Integer& e, const Poly& m);

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.field_->q() == b.field_->q() && a.c_ == b.c_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Canonical key order: degree first, then coefficients compared
  /// lexicographically from the constant term upward.
  friend bool operator<(const Poly& a, const Poly& b);

  /// `GF(q):c0,c1,...,cd` (ascending).
  std::string to_string() const;
  static Poly parse(std::string_view text);

 private:
  void normalize();
  FieldPtr field_;
  std::vector<Elem> c_;
};

using Factorization = std::map<Poly, int>;

/// Product of factors with multiplicities.
Poly expand(const Factorization& f, const FieldPtr& field);

/// Distinct-degree then equal-degree factorization of a monic polynomial of
/// degree >= 1. Deterministic: the equal-degree splitting uses a fixed seed.
Factorization factor_monic(const Poly& f);

/// Trial division by every monic irreducible of degree <= deg(f)/2.
/// Reference implementation for small fields and degrees.
Factorization factor_monic_brute(const Poly& f);

/// Rabin's irreducibility test.
bool is_irreducible(const Poly& f);

/// All monic irreducibles of degree d with nonzero constant term, in
/// canonical order. Cached per (q, d).
const std::vector<Poly>& irreducibles_of_degree(unsigned q, int d);

/// N(q; d) by Moebius inversion: the number of monic irreducibles of
/// degree d over F_q, minus one when d = 1 (excluding z).
Integer irreducible_count(unsigned q, int d);

/// phi-bar(z) = z^deg phi(1/z) / phi(0); roots are inverted.
Poly conjugate_poly(const Poly& phi);

bool is_self_conjugate(const Poly& phi);

/// All monic polynomials of degree n over F_q, constant-term-ascending
/// lexicographic enumeration.
std::vector<Poly> all_monic(unsigned q, int n);

}  // namespace gtau

#endif  // GTAU_POLY_HPP
