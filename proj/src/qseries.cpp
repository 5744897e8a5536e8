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

#include "qseries.hpp"

#include <string>
#include <vector>

namespace gtau {

Rational q_pochhammer(unsigned a, const Rational& q) {
  if (q == 0) throw InvalidArgument("q must be nonzero");
  Rational r = 1;
  for (unsigned i = 1; i <= a; ++i) r *= 1 - rpow(q, -static_cast<long>(i));
  return r;
}

Rational q_binomial(unsigned n, unsigned m, const Rational& q) {
  if (m > n) throw InvalidArgument("q_binomial needs m <= n");
  if (q == 0) throw InvalidArgument("q must be nonzero");
  // [n choose m]_q = prod_{i=1..m} (q^{n-m+i} - 1) / (q^i - 1)
  Rational r = 1;
  for (unsigned i = 1; i <= m; ++i) {
    Rational den = rpow(q, i) - 1;
    if (den == 0) throw InvalidArgument("q_binomial undefined at a root of unity");
    r *= (rpow(q, n - m + i) - 1) / den;
  }
  return r;
}

Laurent pochhammer_inv(unsigned a) {
  Laurent r(1);
  for (unsigned i = 1; i <= a; ++i) r *= Laurent(1) - Laurent::t(-static_cast<int>(i));
  return r;
}

Laurent t_factorial(unsigned a) {
  Laurent r(1);
  for (unsigned i = 1; i <= a; ++i) r *= Laurent(1) - Laurent::t(static_cast<int>(i));
  return r;
}

Laurent t_binomial(unsigned n, unsigned m) {
  if (m > n) return Laurent();
  return t_factorial(n).divided_exact(t_factorial(m) * t_factorial(n - m));
}

QSum parse_qsum(std::string_view name) {
  if (name == "euler") return QSum::kEuler;
  if (name == "qs1") return QSum::kQs1;
  if (name == "qs2") return QSum::kQs2;
  if (name == "qs3") return QSum::kQs3;
  throw InvalidArgument("unknown q-series identity '" + std::string(name) + "'");
}

namespace {

// (1/q)_n / ((1/q)_r (1/q)_{n-r}), exact.
Laurent inv_binomial(unsigned n, unsigned r) {
  return pochhammer_inv(n).divided_exact(pochhammer_inv(r) * pochhammer_inv(n - r));
}

Laurent odd_product(unsigned top) {
  Laurent r(1);
  for (unsigned i = 1; i <= top; i += 2) r *= Laurent(1) - Laurent::t(-static_cast<int>(i));
  return r;
}

Laurent sign(unsigned k) { return Laurent(k % 2 == 0 ? 1 : -1); }

}  // namespace

Laurent qs1_lhs(unsigned n) {
  Laurent s;
  for (unsigned r = 0; r <= n; ++r) s += sign(n - r) * Laurent::t(static_cast<int>(r)) * inv_binomial(n, r);
  return s;
}

Laurent qs1_rhs(unsigned n) { return Laurent::t(static_cast<int>(n)) * odd_product(n); }

Laurent qs2_lhs(unsigned n) {
  Laurent s;
  for (unsigned r = 0; r <= n; ++r) s += sign(r) * inv_binomial(n, r);
  return s;
}

Laurent qs2_rhs(unsigned n) { return n % 2 == 1 ? Laurent() : odd_product(n); }

Laurent qs3_lhs(unsigned n) {
  Laurent s;
  for (unsigned r = 0; r <= n; ++r) s += sign(r) * Laurent::t(-static_cast<int>(r)) * inv_binomial(n, r);
  return s;
}

Laurent qs3_rhs(unsigned n) { return odd_product(n); }

namespace {

using Grid = std::vector<std::vector<Integer>>;  // [u][x]

Grid euler_lhs(int U, int X) {
  Grid g(static_cast<std::size_t>(U) + 1, std::vector<Integer>(static_cast<std::size_t>(X) + 1, 0));
  // series in x of prod_{i<=j} 1/(1-x^i), updated incrementally in j
  std::vector<Integer> s(static_cast<std::size_t>(X) + 1, 0);
  s[0] = 1;
  for (int j = 0; j <= U; ++j) {
    if (j > 0) {
      for (int e = j; e <= X; ++e) s[static_cast<std::size_t>(e)] += s[static_cast<std::size_t>(e - j)];
    }
    g[static_cast<std::size_t>(j)] = s;
  }
  return g;
}

Grid euler_rhs(int U, int X) {
  Grid g(static_cast<std::size_t>(U) + 1, std::vector<Integer>(static_cast<std::size_t>(X) + 1, 0));
  g[0][0] = 1;
  // multiply by 1/(1 - u x^j) for j = 0..X
  for (int j = 0; j <= X; ++j) {
    for (int a = 1; a <= U; ++a) {
      for (int e = j; e <= X; ++e) {
        g[static_cast<std::size_t>(a)][static_cast<std::size_t>(e)] +=
            g[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(e - j)];
      }
    }
  }
  return g;
}

}  // namespace

Report verify_qsum(QSum kind, int n_max) {
  if (n_max < 1) throw InvalidArgument("n_max must be >= 1");
  Report rep;
  if (kind == QSum::kEuler) {
    const int X = std::max(2 * n_max, 8);
    Grid lhs = euler_lhs(n_max, X);
    Grid rhs = euler_rhs(n_max, X);
    for (int a = 0; a <= n_max; ++a) {
      bool ok = true;
      int bad = -1;
      for (int e = 0; e <= X; ++e) {
        if (lhs[static_cast<std::size_t>(a)][static_cast<std::size_t>(e)] !=
            rhs[static_cast<std::size_t>(a)][static_cast<std::size_t>(e)]) {
          ok = false;
          bad = e;
          break;
        }
      }
      Record r{{"check", "euler"}, {"u_degree", a}, {"x_degree", X}};
      if (!ok) {
        r["x_exponent"] = bad;
        r["lhs"] = lhs[static_cast<std::size_t>(a)][static_cast<std::size_t>(bad)].get_str();
        r["rhs"] = rhs[static_cast<std::size_t>(a)][static_cast<std::size_t>(bad)].get_str();
      }
      rep.check(ok, r, "euler: coefficient of u^" + std::to_string(a) + " differs");
    }
    return rep;
  }
  for (int n = 0; n <= n_max; ++n) {
    const auto un = static_cast<unsigned>(n);
    Laurent lhs;
    Laurent rhs;
    std::string name;
    switch (kind) {
      case QSum::kQs1:
        lhs = qs1_lhs(un);
        rhs = qs1_rhs(un);
        name = "qs1";
        break;
      case QSum::kQs2:
        lhs = qs2_lhs(un);
        rhs = qs2_rhs(un);
        name = "qs2";
        break;
      default:
        lhs = qs3_lhs(un);
        rhs = qs3_rhs(un);
        name = "qs3";
        break;
    }
    Record r{{"check", name}, {"n", n}, {"lhs", lhs.to_string("q")}, {"rhs", rhs.to_string("q")}};
    rep.check(lhs == rhs, r, name + ": sides differ at n=" + std::to_string(n));
    if (kind == QSum::kQs3) {
      // reindexing r -> n - r relates qs3 to qs1
      bool ok = (lhs * Laurent::t(n)) == qs1_lhs(un);
      rep.check(ok, Record{{"check", "qs3-reindex"}, {"n", n}}, "qs3 * q^n != qs1 at n=" + std::to_string(n));
    }
  }
  return rep;
}

Interval certified_product(const Rational& a, const Rational& q, int start, int step, int terms) {
  if (q < 2) throw InvalidArgument("certified_product needs q >= 2");
  if (a <= 0 || a > 1) throw InvalidArgument("certified_product needs 0 < a <= 1");
  if (start < 1 || step < 1 || terms < 1) throw InvalidArgument("certified_product needs positive indices");
  Rational partial = 1;
  for (int k = 0; k < terms; ++k) partial *= 1 - a * rpow(q, -(start + k * step));
  // tail sum of x_k = a q^{-(start + k step)} for k >= terms; each x_k <= 1/2
  Rational first = a * rpow(q, -(start + terms * step));
  Rational tail = first / (1 - rpow(q, -step));
  Interval t = certified::one_minus_tail(tail);
  return (Interval(partial) * t).rounded_outward(256);
}

PentagonalBounds pentagonal_bounds(const Rational& q, int precision) {
  if (q * q < 2) throw InvalidArgument("pentagonal bounds need q >= sqrt(2)");
  if (precision < 1) throw InvalidArgument("precision must be >= 1");
  PentagonalBounds b;
  auto p = [&](long e) { return rpow(q, -e); };
  b.lower = 1 - p(1) - p(2) + p(5) + p(7) - p(12) - p(15);
  b.upper = 1 - p(1);
  b.np0 = 1 - p(1) - p(2);
  Rational partial = 1;
  for (int i = 1; i <= precision; ++i) partial *= 1 - p(i);
  Rational first = p(precision + 1);
  if (first > Rational(1, 2)) {
    // push the partial product until the tail satisfies x <= 1/2
    int i = precision + 1;
    while (p(i) > Rational(1, 2)) partial *= 1 - p(i++);
    first = p(i);
  }
  Rational tail = first / (1 - p(1));
  b.value = (Interval(partial) * certified::one_minus_tail(tail)).rounded_outward(256);
  return b;
}

}  // namespace gtau
