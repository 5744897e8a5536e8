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

#ifndef GTAU_EXACT_HPP
#define GTAU_EXACT_HPP

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace gtau {

using Integer = mpz_class;
using Rational = mpq_class;

// Error hierarchy shared by every module. The C API maps these onto status
// codes; nothing below the API boundary reports errors any other way.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class InternalError : public Error {
 public:
  using Error::Error;
};

/// `num/den` with the denominator always present.
std::string to_fraction_string(const Rational& r);

/// Parses `a`, `a/b` or a terminating decimal such as `0.5`.
Rational parse_rational(std::string_view text);

/// num/den in lowest terms. Throws InvalidArgument when den is 0.
Rational fraction(const Integer& num, const Integer& den);

Integer ipow(const Integer& base, unsigned long exp);
Rational rpow(const Rational& base, long exp);

/// Exact value of a rational that must be an integer; throws InternalError
/// otherwise.
Integer require_integer(const Rational& r, std::string_view what);

/// Sparse Laurent polynomial in two indeterminates t and y with rational
/// coefficients. Most uses are univariate in t (the y-degree stays 0); the
/// second variable carries the free parameter of identities such as
/// Macdonald's (1 + t^{1-j} y) product.
class Laurent {
 public:
  using Key = std::pair<int, int>;  // (t exponent, y exponent)
  using Terms = std::map<Key, Rational>;

  Laurent() = default;
  Laurent(const Rational& c);  // NOLINT(google-explicit-constructor)
  Laurent(long c) : Laurent(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static Laurent monomial(const Rational& c, int t_exp, int y_exp = 0);
  static Laurent t(int e = 1) { return monomial(1, e, 0); }
  static Laurent y(int e = 1) { return monomial(1, 0, e); }

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  bool depends_on_y() const;

  /// Coefficient of t^i y^j.
  Rational coeff(int t_exp, int y_exp = 0) const;

  int min_t_exp() const;
  int max_t_exp() const;

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o);
  Laurent& operator*=(const Rational& c);
  Laurent operator-() const;

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  friend Laurent operator*(Laurent a, const Rational& c) { return a *= c; }
  friend bool operator==(const Laurent& a, const Laurent& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

  /// Multiplies by t^dt y^dy.
  Laurent shifted(int dt, int dy = 0) const;

  /// Substitutes t -> t^k (k may be negative).
  Laurent t_scaled(int k) const;

  /// Exact quotient by a y-free divisor. Throws InternalError when the
  /// division leaves a remainder.
  Laurent divided_exact(const Laurent& divisor) const;

  Rational eval(const Rational& t, const Rational& y = 0) const;
  /// Evaluates t only; the result is a polynomial in y (t-exponent 0).
  Laurent eval_t(const Rational& t) const;

  std::string to_string(std::string_view tname = "t",
                        std::string_view yname = "y") const;

 private:
  void add_term(const Key& k, const Rational& c);
  Terms terms_;
};

}  // namespace gtau

#endif  // GTAU_EXACT_HPP
