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

#include "interval.hpp"

#include <algorithm>
#include <array>

namespace gtau {

Interval::Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
  if (lo > hi) throw InternalError("interval with lo > hi");
}

namespace {

Integer floor_of(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Integer ceil_of(const Rational& r) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Integer two_pow(unsigned bits) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, bits);
  return r;
}

}  // namespace

Interval Interval::rounded_outward(unsigned bits) const {
  const Integer scale = two_pow(bits);
  Rational l(floor_of(lo * scale), scale);
  Rational h(ceil_of(hi * scale), scale);
  l.canonicalize();
  h.canonicalize();
  return {l, h};
}

std::string Interval::to_string() const {
  return "[" + to_fraction_string(lo) + ", " + to_fraction_string(hi) + "]";
}

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }

Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }

Interval operator*(const Interval& a, const Interval& b) {
  std::array<Rational, 4> p{a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  auto [mn, mx] = std::minmax_element(p.begin(), p.end());
  return {*mn, *mx};
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.lo <= 0 && b.hi >= 0) throw InvalidArgument("interval division by an interval containing 0");
  return a * Interval(1 / b.hi, 1 / b.lo);
}

Interval hull(const Interval& a, const Interval& b) {
  return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

namespace certified {

Interval sqrt(const Rational& x, unsigned bits) {
  if (x < 0) throw InvalidArgument("sqrt of a negative number");
  const Integer scale = two_pow(bits);
  Integer scaled = floor_of(x * scale * scale);
  Integer s;
  mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
  Rational lo(s, scale);
  Rational hi(s + 1, scale);
  lo.canonicalize();
  hi.canonicalize();
  if (lo * lo == x) hi = lo;
  return {lo, hi};
}

Interval sqrt(const Interval& x, unsigned bits) {
  return {sqrt(x.lo, bits).lo, sqrt(x.hi, bits).hi};
}

Interval euler_e(unsigned bits) {
  // sum_{k<=K} 1/k! with tail < 2/(K+1)!
  Rational sum = 0;
  Rational term = 1;
  unsigned k = 0;
  const Rational eps(1, two_pow(bits + 2));
  while (true) {
    sum += term;
    ++k;
    term /= k;
    if (2 * term < eps) break;
  }
  return Interval(sum, sum + 2 * term).rounded_outward(bits);
}

namespace {

// 2 * atanh(z) for 0 <= z < 1, via the odd power series with a geometric
// remainder bound z^{2K+3} / ((2K+3) (1 - z^2)).
Interval two_atanh(const Rational& z, unsigned bits) {
  const Rational z2 = z * z;
  const Rational eps(1, two_pow(bits + 4));
  Rational sum = 0;
  Rational power = z;  // z^{2k+1}
  long denom = 1;
  while (true) {
    sum += power / denom;
    power *= z2;
    denom += 2;
    Rational tail = power / (denom * (1 - z2));
    if (tail < eps) return Interval(2 * sum, 2 * (sum + tail)).rounded_outward(bits);
  }
}

}  // namespace

Interval ln(const Rational& x, unsigned bits) {
  if (x <= 0) throw InvalidArgument("ln of a non-positive number");
  if (x == 1) return Interval(0);
  if (x < 1) {
    Interval r = ln(1 / x, bits);
    return {-r.hi, -r.lo};
  }
  // x = 2^k * r with 1 <= r < 2
  long k = 0;
  Rational r = x;
  while (r >= 2) {
    r /= 2;
    ++k;
  }
  Interval ln2 = two_atanh(Rational(1, 3), bits + 8);
  Interval lnr = two_atanh((r - 1) / (r + 1), bits + 8);
  return (Interval(k) * ln2 + lnr).rounded_outward(bits);
}

Interval one_minus_tail(const Rational& tail_sum) {
  // prod (1 - x_i) >= exp(-2 S) >= 1 - 2 S, and <= 1.
  Rational lo = 1 - 2 * tail_sum;
  if (lo < 0) lo = 0;
  return {lo, 1};
}

}  // namespace certified
}  // namespace gtau
