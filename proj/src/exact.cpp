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

#include "exact.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

namespace gtau {

std::string to_fraction_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&]() { return InvalidArgument("not a rational number: '" + s + "'"); };
  if (s.empty()) throw bad();
  auto digits_ok = [](std::string_view d, bool allow_sign) {
    if (d.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (d[0] == '-' || d[0] == '+')) i = 1;
    if (i == d.size()) return false;
    return std::all_of(d.begin() + static_cast<long>(i), d.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
  };
  if (auto slash = s.find('/'); slash != std::string::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!digits_ok(num, true) || !digits_ok(den, false)) throw bad();
    if (num[0] == '+') num.erase(0, 1);
    Integer d(den);
    if (d == 0) throw InvalidArgument("zero denominator in '" + s + "'");
    Rational r(Integer(num), d);
    r.canonicalize();
    return r;
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    bool neg = !whole.empty() && whole[0] == '-';
    if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) whole.erase(0, 1);
    if (whole.empty()) whole = "0";
    if (!digits_ok(whole, false) || (!frac.empty() && !digits_ok(frac, false))) throw bad();
    Integer scale = ipow(10, frac.size());
    Rational r(Integer(whole + frac), scale);
    r.canonicalize();
    return neg ? Rational(-r) : r;
  }
  if (!digits_ok(s, true)) throw bad();
  if (s[0] == '+') s.erase(0, 1);
  return Rational(Integer(s));
}

Rational fraction(const Integer& num, const Integer& den) {
  if (den == 0) throw InvalidArgument("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer ipow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Rational rpow(const Rational& base, long exp) {
  if (exp >= 0) {
    Rational r(ipow(base.get_num(), static_cast<unsigned long>(exp)),
               ipow(base.get_den(), static_cast<unsigned long>(exp)));
    r.canonicalize();
    return r;
  }
  if (base == 0) throw InvalidArgument("zero raised to a negative power");
  Rational r(ipow(base.get_den(), static_cast<unsigned long>(-exp)),
             ipow(base.get_num(), static_cast<unsigned long>(-exp)));
  r.canonicalize();
  return r;
}

Integer require_integer(const Rational& r, std::string_view what) {
  if (r.get_den() != 1) {
    throw InternalError(std::string(what) + " is not an integer: " + to_fraction_string(r));
  }
  return r.get_num();
}

// ---------------------------------------------------------------------------
// Laurent

Laurent::Laurent(const Rational& c) {
  if (c != 0) terms_.emplace(Key{0, 0}, c);
}

Laurent Laurent::monomial(const Rational& c, int t_exp, int y_exp) {
  Laurent r;
  if (c != 0) r.terms_.emplace(Key{t_exp, y_exp}, c);
  return r;
}

bool Laurent::depends_on_y() const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [](const auto& kv) { return kv.first.second != 0; });
}

Rational Laurent::coeff(int t_exp, int y_exp) const {
  auto it = terms_.find(Key{t_exp, y_exp});
  return it == terms_.end() ? Rational(0) : it->second;
}

int Laurent::min_t_exp() const {
  int m = std::numeric_limits<int>::max();
  for (const auto& [k, c] : terms_) m = std::min(m, k.first);
  return m;
}

int Laurent::max_t_exp() const {
  int m = std::numeric_limits<int>::min();
  for (const auto& [k, c] : terms_) m = std::max(m, k.first);
  return m;
}

void Laurent::add_term(const Key& k, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent r;
  Rational prod;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      prod = ca * cb;
      r.add_term(Laurent::Key{ka.first + kb.first, ka.second + kb.second}, prod);
    }
  }
  return r;
}

Laurent& Laurent::operator*=(const Laurent& o) { return *this = *this * o; }

Laurent& Laurent::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& [k, v] : r.terms_) v = -v;
  return r;
}

Laurent Laurent::shifted(int dt, int dy) const {
  Laurent r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(Key{k.first + dt, k.second + dy}, c);
  return r;
}

Laurent Laurent::t_scaled(int k) const {
  Laurent r;
  for (const auto& [key, c] : terms_) r.add_term(Key{key.first * k, key.second}, c);
  return r;
}

Laurent Laurent::divided_exact(const Laurent& divisor) const {
  if (divisor.is_zero()) throw InternalError("Laurent division by zero");
  if (divisor.depends_on_y()) throw InternalError("Laurent divisor must be free of y");
  if (is_zero()) return {};
  // divisor = t^s * d0 with d0(0) != 0
  const int s = divisor.min_t_exp();
  const int deg_d0 = divisor.max_t_exp() - s;
  const Rational lead = divisor.coeff(divisor.max_t_exp());

  // Long division from the top, one y-slice at a time.
  Laurent quotient;
  Laurent rem = *this;
  const int floor_exp = min_t_exp();
  while (!rem.is_zero()) {
    // highest t-term of rem (any y slice)
    auto top = std::max_element(rem.terms_.begin(), rem.terms_.end(),
                                [](const auto& a, const auto& b) {
                                  return a.first.first < b.first.first;
                                });
    const int k = top->first.first;
    const int yj = top->first.second;
    const int qexp = k - deg_d0;
    if (qexp < floor_exp) {
      throw InternalError("inexact Laurent division: " + to_string() + " / " +
                          divisor.to_string());
    }
    Rational c = top->second / lead;
    quotient.add_term(Key{qexp - s, yj}, c);
    for (const auto& [dk, dc] : divisor.terms_) {
      rem.add_term(Key{qexp + dk.first - s, yj}, -c * dc);
    }
  }
  return quotient;
}

Rational Laurent::eval(const Rational& t, const Rational& y) const {
  Rational r = 0;
  for (const auto& [k, c] : terms_) {
    Rational term = c * rpow(t, k.first);
    if (k.second != 0) term *= rpow(y, k.second);
    r += term;
  }
  return r;
}

Laurent Laurent::eval_t(const Rational& t) const {
  Laurent r;
  for (const auto& [k, c] : terms_) r.add_term(Key{0, k.second}, c * rpow(t, k.first));
  return r;
}

std::string Laurent::to_string(std::string_view tname, std::string_view yname) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    Rational mag = abs(c);
    const bool neg = c < 0;
    if (first) {
      if (neg) out << "-";
    } else {
      out << (neg ? " - " : " + ");
    }
    first = false;
    const bool has_var = k.first != 0 || k.second != 0;
    if (!has_var || mag != 1) {
      out << mag.get_str();
      if (has_var) out << "*";
    }
    bool need_star = false;
    if (k.first != 0) {
      out << tname;
      if (k.first != 1) out << "^" << k.first;
      need_star = true;
    }
    if (k.second != 0) {
      if (need_star) out << "*";
      out << yname;
      if (k.second != 1) out << "^" << k.second;
    }
  }
  return out.str();
}

}  // namespace gtau
