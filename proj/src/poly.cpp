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

#include "poly.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <random>
#include <sstream>

#include "exact.hpp"

namespace gtau {

Poly::Poly(FieldPtr f, std::vector<Elem> coeffs) : field_(std::move(f)), c_(std::move(coeffs)) {
  if (!field_) throw InvalidArgument("polynomial without a field");
  for (Elem e : c_) {
    if (e >= field_->q()) throw InvalidArgument("coefficient outside the field");
  }
  normalize();
}

Poly Poly::constant(FieldPtr f, Elem c) { return {std::move(f), {c}}; }

Poly Poly::z(FieldPtr f) { return {std::move(f), {0, 1}}; }

Poly Poly::linear(FieldPtr f, Elem c) {
  Elem nc = f->neg(c);
  return {std::move(f), {nc, 1}};
}

Poly Poly::monomial(FieldPtr f, Elem c, int degree) {
  std::vector<Elem> v(static_cast<std::size_t>(degree) + 1, 0);
  v.back() = c;
  return {std::move(f), std::move(v)};
}

void Poly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Elem Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(i)];
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(field_->inv(leading()));
}

Poly Poly::scaled(Elem c) const {
  std::vector<Elem> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = field_->mul(c_[i], c);
  return {field_, std::move(v)};
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return zero(field_);
  std::vector<Elem> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) {
    v[i - 1] = field_->mul(c_[i], field_->from_int(static_cast<long>(i)));
  }
  return {field_, std::move(v)};
}

Elem Poly::eval(Elem x) const {
  Elem r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = field_->add(field_->mul(r, x), *it);
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  const Field& f = *a.field_;
  std::vector<Elem> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
  return {a.field_, std::move(v)};
}

Poly operator-(const Poly& a, const Poly& b) {
  const Field& f = *a.field_;
  std::vector<Elem> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.sub(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
  return {a.field_, std::move(v)};
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly::zero(a.field_);
  const Field& f = *a.field_;
  std::vector<Elem> v(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      v[i + j] = f.add(v[i + j], f.mul(a.c_[i], b.c_[j]));
    }
  }
  return {a.field_, std::move(v)};
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
  const Field& f = *a.field_;
  if (a.degree() < b.degree()) return {zero(a.field_), a};
  std::vector<Elem> r = a.c_;
  std::vector<Elem> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, 0);
  const Elem inv_lead = f.inv(b.leading());
  const int db = b.degree();
  for (int d = a.degree(); d >= db; --d) {
    Elem c = r[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    Elem factor = f.mul(c, inv_lead);
    q[static_cast<std::size_t>(d - db)] = factor;
    for (int i = 0; i <= db; ++i) {
      auto idx = static_cast<std::size_t>(d - db + i);
      r[idx] = f.sub(r[idx], f.mul(factor, b.c_[static_cast<std::size_t>(i)]));
    }
  }
  return {Poly(a.field_, std::move(q)), Poly(a.field_, std::move(r))};
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly Poly::powmod(const Poly& base, const Integer& e, const Poly& m) {
  Poly result = constant(base.field_, 1) % m;
  Poly b = base % m;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % m;
    if (mpz_tstbit(e.get_mpz_t(), i) != 0) result = (result * b) % m;
  }
  return result;
}

bool operator<(const Poly& a, const Poly& b) {
  if (a.field_->q() != b.field_->q()) return a.field_->q() < b.field_->q();
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.c_ < b.c_;
}

std::string Poly::to_string() const {
  std::ostringstream out;
  out << "GF(" << field_->q() << "):";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i > 0) out << ",";
    out << static_cast<unsigned>(c_[i]);
  }
  return out.str();
}

Poly Poly::parse(std::string_view text) {
  const std::string s(text);
  auto bad = [&](const std::string& why) {
    return InvalidArgument("bad polynomial '" + s + "': " + why);
  };
  if (s.rfind("GF(", 0) != 0) throw bad("missing GF(q) prefix");
  auto close = s.find("):");
  if (close == std::string::npos) throw bad("missing '):'");
  const std::string qs = s.substr(3, close - 3);
  if (qs.empty() || !std::all_of(qs.begin(), qs.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; })) {
    throw bad("field order is not a number");
  }
  FieldPtr field = Field::get(static_cast<unsigned>(std::stoul(qs)));
  std::vector<Elem> coeffs;
  const std::string body = s.substr(close + 2);
  if (!body.empty()) {
    std::size_t pos = 0;
    while (true) {
      auto comma = body.find(',', pos);
      std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; })) {
        throw bad("coefficient '" + tok + "' is not a number");
      }
      if (tok.size() > 1 && tok[0] == '0') throw bad("leading zero in coefficient");
      unsigned long v = std::stoul(tok);
      if (v >= field->q()) throw bad("coefficient outside the field");
      coeffs.push_back(static_cast<Elem>(v));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  if (!coeffs.empty() && coeffs.back() == 0) throw bad("trailing zero coefficient");
  return {field, std::move(coeffs)};
}

Poly expand(const Factorization& f, const FieldPtr& field) {
  Poly r = Poly::constant(field, 1);
  for (const auto& [p, m] : f) {
    for (int i = 0; i < m; ++i) r = r * p;
  }
  return r;
}

namespace {

// f(z) = g(z)^p  ->  g
Poly pth_root(const Poly& f) {
  const Field& F = f.field();
  const unsigned p = F.p();
  std::vector<Elem> v;
  for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) {
    // c^{1/p} = c^{q/p}
    v.push_back(F.pow(f.coeff(i), F.q() / p));
  }
  return {f.field_ptr(), std::move(v)};
}

void add_factor(Factorization& out, const Poly& p, int m) {
  if (p.degree() <= 0) return;
  out[p] += m;
}

std::vector<std::pair<Poly, int>> squarefree(const Poly& f) {
  std::vector<std::pair<Poly, int>> out;
  const unsigned p = f.field().p();
  Poly one = Poly::constant(f.field_ptr(), 1);
  Poly d = f.derivative();
  if (d.is_zero()) {
    for (auto& [g, m] : squarefree(pth_root(f))) out.emplace_back(g, m * static_cast<int>(p));
    return out;
  }
  Poly c = Poly::gcd(f, d);
  Poly w = f / c;
  int i = 1;
  while (w.degree() > 0) {
    Poly y = Poly::gcd(w, c);
    Poly fac = w / y;
    if (fac.degree() > 0) out.emplace_back(fac.monic(), i);
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) {
    for (auto& [g, m] : squarefree(pth_root(c.monic()))) out.emplace_back(g, m * static_cast<int>(p));
  }
  return out;
}

Integer field_power(unsigned q, int d) { return ipow(Integer(q), static_cast<unsigned long>(d)); }

void equal_degree(const Poly& g, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (g.degree() == d) {
    out.push_back(g.monic());
    return;
  }
  const Field& F = g.field();
  std::uniform_int_distribution<unsigned> coeff(0, F.q() - 1);
  const Poly one = Poly::constant(g.field_ptr(), 1);
  while (true) {
    std::vector<Elem> v(static_cast<std::size_t>(g.degree()));
    for (auto& e : v) e = static_cast<Elem>(coeff(rng));
    Poly a(g.field_ptr(), std::move(v));
    if (a.degree() <= 0) continue;
    Poly b;
    if (F.p() == 2) {
      // trace map down to F_2
      const int steps = static_cast<int>(F.k()) * d;
      Poly t = a % g;
      Poly acc = t;
      for (int i = 1; i < steps; ++i) {
        t = (t * t) % g;
        acc = acc + t;
      }
      b = acc;
    } else {
      Integer e = (field_power(F.q(), d) - 1) / 2;
      b = Poly::powmod(a, e, g) - one;
    }
    Poly h = Poly::gcd(b, g);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      equal_degree(h, d, rng, out);
      equal_degree(g / h, d, rng, out);
      return;
    }
  }
}

void distinct_degree(const Poly& f0, std::mt19937_64& rng, std::vector<Poly>& out) {
  Poly f = f0.monic();
  const Field& F = f.field();
  const Poly z = Poly::z(f.field_ptr());
  Poly h = z % f;
  int d = 1;
  while (2 * d <= f.degree()) {
    h = Poly::powmod(h, Integer(F.q()), f);
    Poly g = Poly::gcd(h - z, f);
    if (g.degree() > 0) {
      equal_degree(g, d, rng, out);
      f = f / g;
      h = h % f;
    }
    ++d;
  }
  if (f.degree() > 0) out.push_back(f.monic());
}

}  // namespace

Factorization factor_monic(const Poly& f) {
  if (f.degree() < 1) throw InvalidArgument("factor_monic needs degree >= 1");
  if (!f.is_monic()) throw InvalidArgument("factor_monic needs a monic polynomial");
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  Factorization out;
  for (const auto& [g, m] : squarefree(f)) {
    std::vector<Poly> parts;
    distinct_degree(g, rng, parts);
    for (const auto& p : parts) add_factor(out, p, m);
  }
  return out;
}

Factorization factor_monic_brute(const Poly& f) {
  if (f.degree() < 1) throw InvalidArgument("factor_monic needs degree >= 1");
  if (!f.is_monic()) throw InvalidArgument("factor_monic needs a monic polynomial");
  Factorization out;
  Poly rest = f;
  const Poly z = Poly::z(f.field_ptr());
  while (rest.constant_term() == 0 && rest.degree() > 0) {
    out[z] += 1;
    rest = rest / z;
  }
  for (int d = 1; 2 * d <= rest.degree(); ++d) {
    for (const Poly& phi : irreducibles_of_degree(f.field().q(), d)) {
      while (rest.degree() >= d) {
        auto [quo, rem] = Poly::divmod(rest, phi);
        if (!rem.is_zero()) break;
        out[phi] += 1;
        rest = quo;
      }
    }
  }
  if (rest.degree() > 0) out[rest.monic()] += 1;
  return out;
}

bool is_irreducible(const Poly& f) {
  const int n = f.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  const Field& F = f.field();
  const Poly g = f.monic();
  const Poly z = Poly::z(f.field_ptr());
  // z^{q^i} mod g for i = 0..n
  std::vector<Poly> frob{z % g};
  for (int i = 1; i <= n; ++i) frob.push_back(Poly::powmod(frob.back(), Integer(F.q()), g));
  if ((frob[static_cast<std::size_t>(n)] - z) % g != Poly::zero(f.field_ptr())) return false;
  int m = n;
  for (int r = 2; r <= m; ++r) {
    if (m % r != 0) continue;
    while (m % r == 0) m /= r;
    if (Poly::gcd(frob[static_cast<std::size_t>(n / r)] - z, g).degree() > 0) return false;
  }
  return true;
}

std::vector<Poly> all_monic(unsigned q, int n) {
  FieldPtr F = Field::get(q);
  std::vector<Poly> out;
  std::vector<Elem> c(static_cast<std::size_t>(n) + 1, 0);
  c.back() = 1;
  while (true) {
    out.emplace_back(F, c);
    int i = 0;
    while (i < n) {
      auto idx = static_cast<std::size_t>(i);
      if (++c[idx] < q) break;
      c[idx] = 0;
      ++i;
    }
    if (i == n) break;
  }
  return out;
}

const std::vector<Poly>& irreducibles_of_degree(unsigned q, int d) {
  if (d < 1) throw InvalidArgument("irreducible degree must be >= 1");
  static std::mutex mu;
  static std::map<std::pair<unsigned, int>, std::vector<Poly>> cache;
  FieldPtr F = Field::get(q);  // validates q against the cap
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find({q, d}); it != cache.end()) return it->second;
  }
  std::vector<Poly> out;
  for (Poly& p : all_monic(q, d)) {
    if (p.constant_term() == 0) continue;
    if (is_irreducible(p)) out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end());
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(std::make_pair(q, d), std::move(out)).first->second;
}

Integer irreducible_count(unsigned q, int d) {
  auto mobius = [](int n) {
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
      if (n % p == 0) {
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
      }
    }
    if (n > 1) result = -result;
    return result;
  };
  Integer total = 0;
  for (int e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    total += mobius(d / e) * ipow(Integer(q), static_cast<unsigned long>(e));
  }
  total /= d;
  if (d == 1) total -= 1;
  return total;
}

Poly conjugate_poly(const Poly& phi) {
  if (phi.is_zero() || phi.constant_term() == 0) {
    throw InvalidArgument("conjugate_poly needs a nonzero constant term");
  }
  std::vector<Elem> rev(phi.coeffs().rbegin(), phi.coeffs().rend());
  return Poly(phi.field_ptr(), std::move(rev)).monic();
}

bool is_self_conjugate(const Poly& phi) { return conjugate_poly(phi) == phi; }

}  // namespace gtau
