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

#include "classcount.hpp"

#include <string>

#include "field.hpp"
#include "qseries.hpp"

namespace gtau {

int char_flag(unsigned q) {
  unsigned p = 0;
  unsigned k = 0;
  if (!prime_power(q, p, k)) throw InvalidArgument(std::to_string(q) + " is not a prime power");
  return p == 2 ? 1 : 2;
}

namespace {

using Series = std::vector<Integer>;

// s *= (1 + c t^i)
void times_binomial(Series& s, int i, long c) {
  for (int n = static_cast<int>(s.size()) - 1; n >= i; --n) s[static_cast<std::size_t>(n)] += c * s[static_cast<std::size_t>(n - i)];
}

// s /= (1 - c t^i)
void over_geometric(Series& s, int i, const Integer& c) {
  for (std::size_t n = static_cast<std::size_t>(i); n < s.size(); ++n) s[n] += c * s[n - static_cast<std::size_t>(i)];
}

void require_n(int n) {
  if (n < 1) throw InvalidArgument("n must be >= 1");
}

}  // namespace

Series coset_class_series(unsigned q, int N) {
  const int f = char_flag(q);
  if (N < 0) throw InvalidArgument("truncation must be >= 0");
  Series s(static_cast<std::size_t>(N) + 1, 0);
  s[0] = 1;
  for (int i = 1; i <= N; ++i) {
    for (int k = 0; k < f; ++k) times_binomial(s, i, 1);
    if (2 * i <= N) over_geometric(s, 2 * i, q);
  }
  return s;
}

Series gl_class_series(unsigned q, int N) {
  char_flag(q);
  if (N < 0) throw InvalidArgument("truncation must be >= 0");
  Series s(static_cast<std::size_t>(N) + 1, 0);
  s[0] = 1;
  for (int i = 1; i <= N; ++i) {
    times_binomial(s, i, -1);
    over_geometric(s, i, q);
  }
  return s;
}

Integer coset_class_count(int n, unsigned q) {
  require_n(n);
  return coset_class_series(q, n)[static_cast<std::size_t>(n)];
}

Integer gl_class_count(int n, unsigned q) {
  require_n(n);
  return gl_class_series(q, n)[static_cast<std::size_t>(n)];
}

Integer total_class_count(int n, unsigned q) {
  const Integer twice = gl_class_count(n, q) + 3 * coset_class_count(n, q);
  if (twice % 2 != 0) throw InternalError("k(GL) and k(GL tau) have different parity");
  return twice / 2;
}

namespace {

int bound_constant(unsigned q) { return char_flag(q) == 1 ? 28 : 23; }

}  // namespace

Report class_count_report(int n, unsigned q) {
  require_n(n);
  Report rep;
  const Integer coset = coset_class_count(n, q);
  const Integer gl = gl_class_count(n, q);
  const Integer total = total_class_count(n, q);
  const Integer scale = ipow(Integer(q), static_cast<unsigned long>(n / 2));
  const Integer bound = bound_constant(q) * scale;
  Record r{{"n", n},
           {"q", q},
           {"f", char_flag(q)},
           {"k_coset", coset.get_str()},
           {"k_gl", gl.get_str()},
           {"k_total", total.get_str()},
           {"bound", bound.get_str()},
           {"ratio", to_fraction_string(fraction(coset, scale))}};
  rep.check(coset <= bound, r, "coset class count exceeds the bound at n=" + std::to_string(n));
  return rep;
}

Report bound_report(int n_max, const std::vector<unsigned>& qs) {
  Report rep;
  for (unsigned q : qs) {
    const Series s = coset_class_series(q, n_max);
    const int c = bound_constant(q);
    for (int n = 1; n <= n_max; ++n) {
      const Integer& k = s[static_cast<std::size_t>(n)];
      const Integer bound = c * ipow(Integer(q), static_cast<unsigned long>(n / 2));
      rep.check(k >= 0 && k <= bound, Record{{"n", n}, {"q", q}, {"k_coset", k.get_str()}, {"bound", bound.get_str()}},
                "bound fails at n=" + std::to_string(n) + ", q=" + std::to_string(q));
    }
  }
  return rep;
}

Parity parse_parity(std::string_view name) {
  if (name == "even" || name == "even-n") return Parity::kEven;
  if (name == "odd" || name == "odd-n") return Parity::kOdd;
  throw InvalidArgument("unknown parity '" + std::string(name) + "'");
}

namespace {

constexpr unsigned kBits = 200;

// prod_{i>=1} (1 + (sign s)^i)^f with s = q^{-1/2}. Each tail factor lies
// in [exp(-2S), exp(S)], S the tail sum of |x_i|.
Interval half_power_product(const Interval& s, int sign, int f, int terms) {
  Interval prod(1);
  Interval power(1);
  const Interval step = sign > 0 ? s : Interval(0) - s;
  for (int i = 1; i <= terms; ++i) {
    power = (power * step).rounded_outward(kBits);
    prod = (prod * (Interval(1) + power)).rounded_outward(kBits);
  }
  Rational first = s.hi;
  for (int i = 1; i <= terms; ++i) first *= s.hi;
  first = Interval(first).rounded_outward(kBits).hi;
  const Rational S = first / (1 - s.hi);
  const Interval tail(1 - 2 * S, 1 / (1 - S));
  Interval factor = prod * tail;
  Interval out(1);
  for (int k = 0; k < f; ++k) out = out * factor;
  return out.rounded_outward(kBits);
}

}  // namespace

Interval asy_limit(unsigned q, Parity parity) {
  const int f = char_flag(q);
  const Interval s = certified::sqrt(Rational(1, q), kBits);
  const int terms = 400;
  const Interval plus = half_power_product(s, 1, f, terms);
  const Interval alt = half_power_product(s, -1, f, terms);
  const Interval denom = certified_product(1, Rational(q), 1, 1, 200);
  if (parity == Parity::kEven) return ((plus + alt) * Interval(Rational(1, 2)) / denom).rounded_outward(kBits);
  const Interval root = certified::sqrt(Rational(q), kBits);
  return (root * Interval(Rational(1, 2)) * (plus - alt) / denom).rounded_outward(kBits);
}

Report asy_report(unsigned q, Parity parity, int m, const Rational& tolerance) {
  if (m < 1) throw InvalidArgument("m must be >= 1");
  const int n = parity == Parity::kEven ? 2 * m : 2 * m + 1;
  const Integer k = coset_class_count(n, q);
  const Rational ratio = fraction(k, ipow(Integer(q), static_cast<unsigned long>(m)));
  const Interval lim = asy_limit(q, parity);
  const Rational mid = lim.mid();
  Rational gap = (ratio - mid) / mid;
  if (gap < 0) gap = -gap;
  Report rep;
  rep.check(gap < tolerance,
            Record{{"q", q},
                   {"parity", parity == Parity::kEven ? "even" : "odd"},
                   {"n", n},
                   {"k_coset", k.get_str()},
                   {"ratio", to_fraction_string(ratio)},
                   {"ratio_approx", ratio.get_d()},
                   {"limit", lim.to_string()},
                   {"limit_approx", mid.get_d()},
                   {"relative_gap", gap.get_d()}},
            "k(GL(" + std::to_string(n) + "," + std::to_string(q) + ") tau)/q^" + std::to_string(m) +
                " is not within tolerance of the limit");
  return rep;
}

}  // namespace gtau
