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

#include "measures.hpp"

#include <algorithm>
#include <cmath>

#include "classdata.hpp"
#include "formulas.hpp"
#include "matrix.hpp"
#include "poly.hpp"
#include "qseries.hpp"

namespace gtau {

Family parse_family(std::string_view name) {
  if (name == "sp" || name == "Sp") return Family::kSp;
  if (name == "o-even" || name == "O-even") return Family::kOEven;
  if (name == "o-odd" || name == "O-odd") return Family::kOOdd;
  throw InvalidArgument("unknown measure family '" + std::string(name) + "'");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::kSp:
      return "sp";
    case Family::kOEven:
      return "o-even";
    case Family::kOOdd:
      return "o-odd";
  }
  return "?";
}

PartitionMeasure::PartitionMeasure(Family f, Rational u_, unsigned q_) : family(f), u(std::move(u_)), q(q_) {
  if (u <= 0 || u > 1) throw InvalidArgument("u must lie in (0, 1]");
  if (q < 2) throw InvalidArgument("q must be >= 2");
}

namespace {

bool size_parity_ok(const PartitionMeasure& m, int k) {
  return m.family == Family::kOOdd ? k % 2 == 1 : k % 2 == 0;
}

Constraint support_constraint(const PartitionMeasure& m) {
  return m.family == Family::kSp ? Constraint::kOddPartsEvenMult : Constraint::kEvenPartsEvenMult;
}

int u_exponent(const PartitionMeasure& m, int k) { return m.family == Family::kOOdd ? k - 1 : k; }

}  // namespace

bool in_support(const PartitionMeasure& m, const Partition& lambda) {
  return size_parity_ok(m, lambda.size()) && satisfies(lambda, support_constraint(m));
}

Rational measure_weight(const PartitionMeasure& m, const Partition& lambda) {
  if (!in_support(m, lambda)) return 0;
  const int sign = m.family == Family::kSp ? 1 : -1;
  return rpow(m.u, u_exponent(m, lambda.size())) / unipotent_weight(lambda, Rational(m.q), sign);
}

Interval measure_prefactor(const PartitionMeasure& m) {
  return certified_product(m.u * m.u, Rational(m.q), 1, 2, 60);
}

Interval measure_mass(const PartitionMeasure& m, const Partition& lambda) {
  const Rational w = measure_weight(m, lambda);
  if (w == 0) return Interval(0);
  return measure_prefactor(m) * Interval(w);
}

Rational size_weight(const PartitionMeasure& m, int k) {
  if (k < 0 || !size_parity_ok(m, k)) return 0;
  const int j = k / 2;
  const Rational q(m.q);
  Rational r = rpow(m.u, u_exponent(m, k)) * rpow(q, -j);
  for (int i = 1; i <= j; ++i) r /= 1 - rpow(q, -2 * i);
  return r;
}

Rational tail_bound(const PartitionMeasure& m, int cap) {
  if (cap < 0) throw InvalidArgument("cap must be >= 0");
  // size_weight(2j or 2j+1) <= (u^2/q)^j / prod_{i>=1} (1 - q^{-2i})
  const Rational q(m.q);
  const Rational infinite = certified_product(1, q, 2, 2, 60).lo;
  const int offset = m.family == Family::kOOdd ? 1 : 0;
  int J = 0;
  while (2 * J + offset <= cap) ++J;
  const Rational r = m.u * m.u / q;
  return measure_prefactor(m).hi * rpow(r, J) / (1 - r) / infinite;
}

namespace {

Rational enumerated_size_weight(const PartitionMeasure& m, int k) {
  Rational s = 0;
  if (!size_parity_ok(m, k)) return s;
  for (const Partition& lambda : enumerate_partitions(k, support_constraint(m))) s += measure_weight(m, lambda);
  return s;
}

}  // namespace

Interval normalization_interval(const PartitionMeasure& m, int cap) {
  Rational partial = 0;
  for (int k = 0; k <= cap; ++k) partial += enumerated_size_weight(m, k);
  const Interval body = measure_prefactor(m) * Interval(partial);
  return body + Interval(0, tail_bound(m, cap));
}

Report normalization_check(const PartitionMeasure& m, int cap) {
  Report rep;
  Rational partial = 0;
  for (int k = 0; k <= cap; ++k) {
    const Rational enumerated = enumerated_size_weight(m, k);
    const Rational closed = size_weight(m, k);
    partial += enumerated;
    if (enumerated != closed) {
      rep.check(false,
                Record{{"check", "size-weight"}, {"size", k}, {"enumerated", to_fraction_string(enumerated)},
                       {"closed_form", to_fraction_string(closed)}},
                "size " + std::to_string(k) + " weights disagree with the generating function");
    }
  }
  const Interval total = measure_prefactor(m) * Interval(partial) + Interval(0, tail_bound(m, cap));
  rep.check(total.contains(1),
            Record{{"check", "normalization"},
                   {"family", family_name(m.family)},
                   {"u", to_fraction_string(m.u)},
                   {"q", m.q},
                   {"cap", cap},
                   {"interval", total.rounded_outward(96).to_string()},
                   {"lo", total.lo_double()},
                   {"hi", total.hi_double()},
                   {"width", total.width().get_d()}},
            "normalization interval misses 1");
  return rep;
}

namespace {

const Rational& two_pow_64() {
  static const Rational r(ipow(Integer(2), 64));
  return r;
}

Rational uniform_below(const Rational& total, std::mt19937_64& rng) {
  const std::uint64_t r = rng();
  return Rational(Integer(std::to_string(r))) / two_pow_64() * total;
}

}  // namespace

PartitionSampler::PartitionSampler(const PartitionMeasure& m, int cap) : m_(m), cap_(cap) {
  if (cap < 0) throw InvalidArgument("cap must be >= 0");
  if (tail_bound(m, cap) >= Rational(1, 1000000000)) {
    throw InvalidArgument("tail mass beyond cap " + std::to_string(cap) + " may exceed 1e-9");
  }
  Rational acc = 0;
  for (int k = 0; k <= cap; ++k) {
    acc += size_weight(m, k);
    size_cdf_.push_back(acc);
  }
}

int PartitionSampler::default_cap(const PartitionMeasure& m) {
  int cap = 0;
  while (tail_bound(m, cap) >= Rational(1, 1000000000)) ++cap;
  return cap;
}

const std::vector<std::pair<Partition, Rational>>& PartitionSampler::partitions_of(int k) {
  auto it = by_size_.find(k);
  if (it != by_size_.end()) return it->second;
  std::vector<std::pair<Partition, Rational>> cdf;
  Rational acc = 0;
  for (const Partition& lambda : enumerate_partitions(k, support_constraint(m_))) {
    acc += measure_weight(m_, lambda);
    cdf.emplace_back(lambda, acc);
  }
  return by_size_.emplace(k, std::move(cdf)).first->second;
}

Partition PartitionSampler::sample(std::mt19937_64& rng) {
  const Rational x = uniform_below(size_cdf_.back(), rng);
  const auto k = static_cast<int>(std::upper_bound(size_cdf_.begin(), size_cdf_.end(), x) - size_cdf_.begin());
  const auto& cdf = partitions_of(k);
  const Rational y = uniform_below(cdf.back().second, rng);
  auto it = std::upper_bound(cdf.begin(), cdf.end(), y, [](const Rational& v, const auto& e) { return v < e.second; });
  return it->first;
}

Report sample_report(const PartitionMeasure& m, long trials, std::uint64_t seed) {
  if (trials < 1) throw InvalidArgument("trials must be >= 1");
  PartitionSampler sampler(m, PartitionSampler::default_cap(m));
  std::mt19937_64 rng(seed);
  std::map<Partition, long> counts;
  for (long t = 0; t < trials; ++t) ++counts[sampler.sample(rng)];
  Report rep;
  const auto T = static_cast<double>(trials);
  for (int k = 0; k <= 4; ++k) {
    for (const Partition& lambda : enumerate_partitions(k)) {
      if (!in_support(m, lambda)) continue;
      const Interval mass = measure_mass(m, lambda);
      const double p = mass.mid().get_d();
      const double emp = static_cast<double>(counts[lambda]) / T;
      const double z = p > 0 && p < 1 ? (emp - p) / std::sqrt(p * (1 - p) / T) : 0.0;
      rep.check(std::abs(z) < 6,
                Record{{"family", family_name(m.family)},
                       {"u", to_fraction_string(m.u)},
                       {"q", m.q},
                       {"partition", lambda.to_string()},
                       {"mass", mass.rounded_outward(64).to_string()},
                       {"mass_approx", p},
                       {"empirical", emp},
                       {"z_score", z}},
                "empirical frequency of " + lambda.to_string() + " is more than 6 standard errors off");
    }
  }
  rep.add(Record{{"trials", trials}, {"seed", seed}, {"cap", sampler.cap()}});
  return rep;
}

namespace {

using USeries = std::vector<Rational>;

USeries times(const USeries& a, const USeries& b) {
  USeries r(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < a.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

// prod_{j>=0} (1 + c u^e Q^j) = sum_n c^n Q^{n(n-1)/2} / ((1-Q)...(1-Q^n)) u^{en}
USeries euler_factor(const Rational& c, int e, const Rational& Q, int trunc) {
  USeries r(static_cast<std::size_t>(trunc) + 1, 0);
  Rational den = 1;
  for (int n = 0; e * n <= trunc; ++n) {
    if (n > 0) den *= 1 - rpow(Q, n);
    r[static_cast<std::size_t>(e * n)] = rpow(c, n) * rpow(Q, static_cast<long>(n) * (n - 1) / 2) / den;
  }
  return r;
}

}  // namespace

Report verify_product_identity(unsigned q, int trunc) {
  if (trunc < 1) throw InvalidArgument("trunc must be >= 1");
  FieldPtr field = Field::get(q);
  const int f = field->even_characteristic() ? 1 : 2;
  const Rational Q(q);
  USeries rhs(static_cast<std::size_t>(trunc) + 1, 0);
  rhs[0] = 1;
  // prod_{i>=1} (1 - u^2/q^{2i-1}), f times
  const USeries unip = euler_factor(-1 / Q, 2, 1 / (Q * Q), trunc);
  for (int k = 0; k < f; ++k) rhs = times(rhs, unip);
  int self_conjugate = 0;
  int pairs = 0;
  for (int d = 1; d <= trunc; ++d) {
    for (const Poly& phi : irreducibles_of_degree(q, d)) {
      if (d == 1 && (phi == Poly::linear(field, 1) || phi == Poly::linear(field, field->minus_one()))) continue;
      const Poly bar = conjugate_poly(phi);
      if (bar == phi) {
        // prod_{i>=1} (1 + u^d (-1)^i q^{-id/2})
        const Rational step = -rpow(Q, -(d / 2));
        rhs = times(rhs, euler_factor(step, d, step, trunc));
        ++self_conjugate;
      } else if (phi < bar && 2 * d <= trunc) {
        // prod_{i>=1} (1 - u^{2d} q^{-id})
        const Rational step = rpow(Q, -d);
        rhs = times(rhs, euler_factor(-step, 2 * d, step, trunc));
        ++pairs;
      }
    }
  }
  Report rep;
  for (int k = 0; k <= trunc; ++k) {
    const Rational lhs = k == 0 ? Rational(1) : (k == 2 ? Rational(-1) : Rational(0));
    const Rational& r = rhs[static_cast<std::size_t>(k)];
    rep.check(lhs == r,
              Record{{"q", q}, {"f", f}, {"u_degree", k}, {"lhs", to_fraction_string(lhs)}, {"rhs", to_fraction_string(r)}},
              "product identity fails at u^" + std::to_string(k));
  }
  rep.add(Record{{"q", q}, {"trunc", trunc}, {"self_conjugate_factors", self_conjugate}, {"pair_factors", pairs}});
  return rep;
}

std::map<Partition, Rational> finite_unipotent_distribution(int n, unsigned q) {
  std::map<Partition, Rational> out;
  for_each_class_data(n, q, ClassPredicate::kReal, [&](const ClassData& c) {
    const Rational p = prob_ggtau(c);
    if (p != 0) out[c.unipotent_part()] += p;
  });
  return out;
}

namespace {

// lambda_phi(h) from nullities of phi(h)^k.
Partition primary_partition(const Matrix& h, const Poly& phi) {
  const int d = phi.degree();
  const Matrix p = eval_poly(phi, h);
  Matrix pk = p;
  std::vector<int> dual;
  int prev = 0;
  while (true) {
    const int null = pk.nullity();
    if (null == prev) break;
    dual.push_back((null - prev) / d);
    prev = null;
    if (null == h.n()) break;
    pk = pk * p;
  }
  return Partition(dual).dual();
}

}  // namespace

Report empirical_limit_compare(int n, unsigned q, long trials, std::uint64_t seed) {
  if (trials < 10000) throw InvalidArgument("empirical comparison needs at least 10^4 trials");
  if (n < 1) throw InvalidArgument("n must be >= 1");
  FieldPtr field = Field::get(q);
  const PartitionMeasure m(n % 2 == 0 ? Family::kOEven : Family::kOOdd, 1, q);
  const Poly z_minus_one = Poly::linear(field, 1);
  // lowest-degree conjugate pair that fits, for the reality check
  std::optional<Poly> pair_phi;
  for (int d = 1; 2 * d <= n && !pair_phi; ++d) {
    for (const Poly& phi : irreducibles_of_degree(q, d)) {
      if (!is_self_conjugate(phi)) {
        pair_phi = phi;
        break;
      }
    }
  }
  std::mt19937_64 rng(seed);
  std::map<Partition, long> counts;
  long parity_violations = 0;
  long reality_violations = 0;
  std::map<Partition, long> pair_counts;
  for (long t = 0; t < trials; ++t) {
    const Matrix g = random_gl(field, n, rng);
    const Matrix h = g * g.tau();
    const Partition lambda = primary_partition(h, z_minus_one);
    ++counts[lambda];
    if (lambda.size() % 2 != n % 2) ++parity_violations;
    if (pair_phi) {
      const Partition a = primary_partition(h, *pair_phi);
      const Partition b = primary_partition(h, conjugate_poly(*pair_phi));
      if (a != b) ++reality_violations;
      ++pair_counts[a];
    }
  }
  Report rep;
  const auto T = static_cast<double>(trials);
  for (int k = 0; k <= 4; ++k) {
    for (const Partition& lambda : enumerate_partitions(k)) {
      if (!in_support(m, lambda)) continue;
      const Interval mass = measure_mass(m, lambda);
      const double p = mass.mid().get_d();
      const double emp = static_cast<double>(counts[lambda]) / T;
      const double z = (emp - p) / std::sqrt(p * (1 - p) / T);
      Record r{{"partition", lambda.to_string()},
               {"mass", mass.rounded_outward(64).to_string()},
               {"mass_approx", p},
               {"empirical", emp},
               {"z_score", z}};
      const bool anchor = (n % 2 == 0 && lambda.empty()) || (n % 2 == 1 && lambda == Partition({1}));
      if (anchor) {
        r["tolerance"] = 0.02;
        rep.check(std::abs(emp - p) < 0.02, r, "empirical frequency of " + lambda.to_string() + " is off by >= 0.02");
      } else {
        rep.add(r);
      }
    }
  }
  rep.check(parity_violations == 0, Record{{"check", "size-parity"}, {"violations", parity_violations}},
            "|lambda_{z-1}| had the wrong parity");
  if (n % 2 == 1) {
    rep.check(counts[Partition()] == 0, Record{{"check", "odd-n-empty"}, {"count", counts[Partition()]}},
              "empty lambda_{z-1} observed for odd n");
  }
  if (pair_phi) {
    Record r{{"check", "conjugate-pair"},
             {"phi", pair_phi->to_string()},
             {"phi_bar", conjugate_poly(*pair_phi).to_string()},
             {"violations", reality_violations},
             {"empirical_empty", static_cast<double>(pair_counts[Partition()]) / T}};
    rep.check(reality_violations == 0, r, "lambda_phi != lambda_phibar in a sample");
  }
  return rep;
}

}  // namespace gtau
