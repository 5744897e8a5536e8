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

#include "formulas.hpp"

#include "matrix.hpp"

namespace gtau {

Rational unipotent_weight(const Partition& lambda, const Rational& q, int sign) {
  if (q <= 1) throw InvalidArgument("q must exceed 1");
  if (sign != 1 && sign != -1) throw InvalidArgument("sign must be +1 or -1");
  const long twice = 2 * lambda.n() + lambda.size() + sign * lambda.odd_parts();
  // o(lambda) and |lambda| have equal parity, so the exponent is integral
  Rational r = rpow(q, twice / 2);
  for (const auto& [part, m] : lambda.multiplicities()) {
    for (int j = 1; j <= m / 2; ++j) r *= 1 - rpow(q, -2 * j);
  }
  return r;
}

namespace {

bool is_z_minus_one(const Poly& phi) { return phi == Poly::linear(phi.field_ptr(), 1); }

bool is_z_plus_one(const Poly& phi) {
  return !phi.field().even_characteristic() && phi == Poly::linear(phi.field_ptr(), phi.field().minus_one());
}

// 2 * [sum_{h<i} h m_h m_i + (1/2) sum_i (i-1) m_i^2]
long twice_pair_exponent(const Partition& lambda) {
  const auto mult = lambda.multiplicities();
  long s = 0;
  for (auto a = mult.begin(); a != mult.end(); ++a) {
    for (auto b = std::next(a); b != mult.end(); ++b) s += 2L * a->first * a->second * b->second;
    s += static_cast<long>(a->first - 1) * a->second * a->second;
  }
  return s;
}

}  // namespace

Rational B_factor(const Poly& phi, const Partition& lambda) {
  if (phi.degree() < 1 || !phi.is_monic()) throw InvalidArgument("B_factor needs a monic polynomial");
  if (phi.constant_term() == 0) throw InvalidArgument("B_factor is undefined for phi = z");
  const Rational q(phi.field().q());
  if (is_z_minus_one(phi)) return unipotent_weight(lambda, q, -1);
  if (is_z_plus_one(phi)) return unipotent_weight(lambda, q, 1);
  if (!is_self_conjugate(phi)) throw InvalidArgument("non-self-conjugate " + phi.to_string() + " needs B_pair");
  const int d = phi.degree();
  if (d % 2 != 0) throw InternalError("self-conjugate polynomial of odd degree " + phi.to_string());
  const Integer half = ipow(Integer(phi.field().q()), static_cast<unsigned long>(d / 2));
  Rational r = rpow(q, (d / 2) * twice_pair_exponent(lambda));
  for (const auto& [part, m] : lambda.multiplicities()) r *= unitary_order(m, half);
  return r;
}

Rational B_pair(const Poly& phi, const Partition& lambda) {
  if (phi.constant_term() == 0) throw InvalidArgument("B_pair is undefined for phi = z");
  if (is_self_conjugate(phi)) throw InvalidArgument("B_pair needs a non-self-conjugate polynomial");
  const int d = phi.degree();
  const Integer Q = ipow(Integer(phi.field().q()), static_cast<unsigned long>(d));
  Rational r = rpow(Rational(Q), twice_pair_exponent(lambda));
  for (const auto& [part, m] : lambda.multiplicities()) r *= gl_order(m, Q);
  return r;
}

namespace {

// prod over phi != z-1 (and != z+1 when skip_plus) of 1/B; pairs are
// consumed once. Zero unless c is real.
Rational generic_part(const ClassData& c, bool skip_plus) {
  if (!c.is_real()) return 0;
  Rational r = 1;
  for (const auto& [phi, lambda] : c.entries()) {
    if (is_z_minus_one(phi) || (skip_plus && is_z_plus_one(phi))) continue;
    if (is_z_plus_one(phi) || is_self_conjugate(phi)) {
      r /= B_factor(phi, lambda);
    } else if (phi < conjugate_poly(phi)) {
      r /= B_pair(phi, lambda);
    }
  }
  return r;
}

}  // namespace

Rational prob_ggtau(const ClassData& c) {
  if (c.n() == 0) return 1;
  if (!c.is_real()) return 0;
  const Partition minus = c.unipotent_part();
  const Partition plus = c.minus_one_part();
  if (!minus.even_parts_even_mult()) return 0;
  if (!plus.odd_parts_even_mult()) return 0;
  const Rational q(c.q());
  return generic_part(c, true) / unipotent_weight(minus, q, -1) / unipotent_weight(plus, q, 1);
}

Integer count_solutions(const ClassData& c) {
  return require_integer(prob_ggtau(c) * Rational(centralizer_size(c)), "solution count");
}

UnipotentTarget parse_unipotent_target(std::string_view name) {
  if (name == "gl" || name == "GL" || name == "gl-ggtau") return UnipotentTarget::kGLggtau;
  if (name == "sp" || name == "Sp") return UnipotentTarget::kSp;
  throw InvalidArgument("unknown unipotent target '" + std::string(name) + "'");
}

Rational prob_unipotent(const Partition& mu, const Rational& q, UnipotentTarget target) {
  if (target == UnipotentTarget::kGLggtau) {
    if (!mu.even_parts_even_mult()) return 0;
    return 1 / unipotent_weight(mu, q, -1);
  }
  // Odd size forces an odd part of odd multiplicity, so it lands here too.
  if (!mu.odd_parts_even_mult()) return 0;
  return 1 / unipotent_weight(mu, q, 1);
}

Rational prob_sp_class(const ClassData& c) {
  if (c.n() % 2 != 0) throw InvalidArgument("Sp class data needs even n");
  if (c.n() == 0) return 1;
  if (!c.is_real()) return 0;
  const Partition minus = c.unipotent_part();
  const Partition plus = c.minus_one_part();
  if (!minus.odd_parts_even_mult() || !plus.odd_parts_even_mult()) return 0;
  return generic_part(c, false) / unipotent_weight(minus, Rational(c.q()), 1);
}

Integer gow_macdonald_count(int n, const Integer& q) {
  if (n < 0) throw InvalidArgument("n must be >= 0");
  Integer r = 1;
  for (int i = 1; i <= n; ++i) {
    Integer qi = ipow(q, static_cast<unsigned long>(i));
    r *= i % 2 == 1 ? Integer(qi - 1) : qi;
  }
  return r;
}

Interval min_centralizer_bound(int n, unsigned q) {
  if (n < 2) throw InvalidArgument("min_centralizer_bound needs n >= 2");
  if (q < 2) throw InvalidArgument("min_centralizer_bound needs q >= 2");
  const Rational Q(q);
  const Rational a = 1 - rpow(Q, -2) - rpow(Q, -4);
  const Rational front = a * a * rpow(Q, n / 2);
  // (1 - 1/q) / (4 e log_q n) = (1 - 1/q) ln q / (4 e ln n)
  const Interval inner =
      Interval(1 - 1 / Q) * certified::ln(Q) / (Interval(Rational(4)) * certified::euler_e() * certified::ln(Rational(n)));
  return (Interval(front) * certified::sqrt(inner)).rounded_outward(64);
}

Report verify_centbounduni(int max_size, const std::vector<unsigned>& qs) {
  Report rep;
  for (unsigned qu : qs) {
    const Rational q(qu);
    const Rational c = 1 - rpow(q, -2) - rpow(q, -4);
    for (int s = 0; s <= max_size; ++s) {
      for (const Partition& lambda : enumerate_partitions(s, Constraint::kEvenPartsEvenMult)) {
        const Rational lhs = unipotent_weight(lambda, q, -1);
        const Rational rhs = rpow(q, s / 2) * c;
        rep.check(lhs >= rhs,
                  Record{{"part", 1}, {"q", qu}, {"lambda", lambda.to_string()}, {"lhs", to_fraction_string(lhs)},
                         {"rhs", to_fraction_string(rhs)}},
                  "centralizer inequality (minus sign) fails at " + lambda.to_string());
      }
      for (const Partition& lambda : enumerate_partitions(s, Constraint::kOddPartsEvenMult)) {
        // |lambda| is even here, so q^{|lambda|/2} is exact
        const Rational lhs = unipotent_weight(lambda, q, 1);
        const Rational rhs = rpow(q, s / 2) * c;
        rep.check(lhs >= rhs,
                  Record{{"part", 2}, {"q", qu}, {"lambda", lambda.to_string()}, {"lhs", to_fraction_string(lhs)},
                         {"rhs", to_fraction_string(rhs)}},
                  "centralizer inequality (plus sign) fails at " + lambda.to_string());
      }
    }
  }
  return rep;
}

}  // namespace gtau
