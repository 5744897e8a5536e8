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

#ifndef GTAU_INTERVAL_HPP
#define GTAU_INTERVAL_HPP

#include <string>

#include "exact.hpp"

namespace gtau {

/// Closed interval [lo, hi] with rational endpoints. Every operation returns
/// an enclosure of the exact result set; nothing is ever rounded inward.
struct Interval {
  Rational lo;
  Rational hi;

  Interval() = default;
  Interval(const Rational& v) : lo(v), hi(v) {}  // NOLINT(google-explicit-constructor)
  Interval(Rational l, Rational h);

  bool contains(const Rational& v) const { return lo <= v && v <= hi; }
  bool is_point() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / 2; }

  /// Rounds lo down and hi up to multiples of 2^-bits.
  Interval rounded_outward(unsigned bits) const;

  std::string to_string() const;  // "[lo, hi]" as num/den strings
  double lo_double() const { return lo.get_d(); }
  double hi_double() const { return hi.get_d(); }
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
/// Throws InvalidArgument when the divisor straddles zero.
Interval operator/(const Interval& a, const Interval& b);
Interval hull(const Interval& a, const Interval& b);

namespace certified {

constexpr unsigned kDefaultBits = 128;

Interval sqrt(const Rational& x, unsigned bits = kDefaultBits);
Interval sqrt(const Interval& x, unsigned bits = kDefaultBits);
Interval euler_e(unsigned bits = kDefaultBits);
/// Natural logarithm of a positive rational.
Interval ln(const Rational& x, unsigned bits = kDefaultBits);

/// Encloses prod_{i>=1} (1 - x_i) given 0 <= x_i and a rational upper
/// bound on sum_{i>P} x_i, using |log(1 - x)| <= 2x for 0 <= x <= 1/2.
/// `tail_sum` must already be <= 1/2 termwise; the caller guarantees that
/// every tail term is at most 1/2.
Interval one_minus_tail(const Rational& tail_sum);

}  // namespace certified
}  // namespace gtau

#endif  // GTAU_INTERVAL_HPP
