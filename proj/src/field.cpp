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

#include "field.hpp"

#include <atomic>
#include <map>
#include <mutex>
#include <string>

#include "exact.hpp"

namespace gtau {

namespace {

std::atomic<unsigned> g_field_cap{16};
constexpr unsigned kHardCap = 256;

// Digits of e in base p, length k.
std::vector<unsigned> digits(unsigned e, unsigned p, unsigned k) {
  std::vector<unsigned> d(k);
  for (unsigned i = 0; i < k; ++i) {
    d[i] = e % p;
    e /= p;
  }
  return d;
}

unsigned undigits(const std::vector<unsigned>& d, unsigned p) {
  unsigned e = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) e = e * p + *it;
  return e;
}

// (a * b) mod modulus over F_p; modulus is monic of degree k (k+1 coeffs).
std::vector<unsigned> mulmod(const std::vector<unsigned>& a, const std::vector<unsigned>& b,
                             const std::vector<unsigned>& modulus, unsigned p) {
  const std::size_t k = modulus.size() - 1;
  std::vector<unsigned> prod(2 * k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  for (std::size_t d = 2 * k - 1; d >= k; --d) {
    unsigned c = prod[d];
    if (c == 0) continue;
    // x^d = x^{d-k} * x^k, x^k = -sum modulus[i] x^i
    for (std::size_t i = 0; i < k; ++i) {
      prod[d - k + i] = (prod[d - k + i] + (p - c) * modulus[i]) % p;
    }
    prod[d] = 0;
  }
  prod.resize(k);
  return prod;
}

std::vector<unsigned> prime_divisors(unsigned n) {
  std::vector<unsigned> r;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      r.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) r.push_back(n);
  return r;
}

// True if x has multiplicative order p^k - 1 modulo `modulus`.
bool x_is_primitive(const std::vector<unsigned>& modulus, unsigned p) {
  const unsigned k = static_cast<unsigned>(modulus.size()) - 1;
  unsigned order = 1;
  for (unsigned i = 0; i < k; ++i) order *= p;
  order -= 1;
  std::vector<unsigned> x(k, 0);
  if (k == 1) {
    x[0] = (p - modulus[0]) % p;
  } else {
    x[1] = 1;
  }
  auto power = [&](unsigned e) {
    std::vector<unsigned> r(k, 0);
    r[0] = 1;
    std::vector<unsigned> b = x;
    while (e > 0) {
      if (e & 1U) r = mulmod(r, b, modulus, p);
      b = mulmod(b, b, modulus, p);
      e >>= 1U;
    }
    return r;
  };
  std::vector<unsigned> one(k, 0);
  one[0] = 1;
  if (power(order) != one) return false;
  for (unsigned r : prime_divisors(order)) {
    if (power(order / r) == one) return false;
  }
  return true;
}

std::vector<unsigned> choose_modulus(unsigned p, unsigned k) {
  // Fixed moduli for the small extension fields; see field.hpp.
  static const std::map<std::pair<unsigned, unsigned>, std::vector<unsigned>> fixed = {
      {{2, 2}, {1, 1, 1}},
      {{2, 3}, {1, 1, 0, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}},
      {{3, 2}, {2, 2, 1}},
  };
  if (auto it = fixed.find({p, k}); it != fixed.end()) return it->second;
  unsigned count = 1;
  for (unsigned i = 0; i < k; ++i) count *= p;
  for (unsigned low = 0; low < count; ++low) {
    std::vector<unsigned> m = digits(low, p, k);
    m.push_back(1);
    if (m[0] == 0) continue;
    if (x_is_primitive(m, p)) return m;
  }
  throw InternalError("no primitive modulus found");
}

}  // namespace

bool prime_power(unsigned q, unsigned& p, unsigned& k) {
  if (q < 2) return false;
  for (unsigned d = 2; d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  k = 0;
  unsigned r = q;
  while (r % p == 0) {
    r /= p;
    ++k;
  }
  return r == 1;
}

unsigned Field::cap() { return g_field_cap.load(); }

void Field::set_cap(unsigned q) {
  if (q < 2 || q > kHardCap) throw InvalidArgument("field cap must lie in [2, 256]");
  g_field_cap.store(q);
}

std::shared_ptr<const Field> Field::get(unsigned q) {
  unsigned p = 0;
  unsigned k = 0;
  if (!prime_power(q, p, k)) throw InvalidArgument("q = " + std::to_string(q) + " is not a prime power");
  if (q > cap()) {
    throw InvalidArgument("q = " + std::to_string(q) + " exceeds the field cap " + std::to_string(cap()));
  }
  static std::mutex mu;
  static std::map<unsigned, std::shared_ptr<const Field>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[q];
  if (!slot) slot = std::make_shared<const Field>(p, k);
  return slot;
}

Field::Field(unsigned p, unsigned k) : p_(p), k_(k), q_(1) {
  for (unsigned i = 0; i < k; ++i) q_ *= p;
  if (k == 1) {
    modulus_ = {0, 1};
  } else {
    modulus_ = choose_modulus(p, k);
  }
  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  for (unsigned a = 0; a < q_; ++a) {
    auto da = digits(a, p, k);
    std::vector<unsigned> dn(k);
    for (unsigned i = 0; i < k; ++i) dn[i] = (p - da[i]) % p;
    neg_[a] = static_cast<Elem>(undigits(dn, p));
    for (unsigned b = 0; b < q_; ++b) {
      auto db = digits(b, p, k);
      std::vector<unsigned> ds(k);
      for (unsigned i = 0; i < k; ++i) ds[i] = (da[i] + db[i]) % p;
      add_[a * q_ + b] = static_cast<Elem>(undigits(ds, p));
      if (k == 1) {
        mul_[a * q_ + b] = static_cast<Elem>((a * b) % p);
      } else {
        mul_[a * q_ + b] = static_cast<Elem>(undigits(mulmod(da, db, modulus_, p), p));
      }
    }
  }
  for (unsigned a = 1; a < q_; ++a) {
    for (unsigned b = 1; b < q_; ++b) {
      if (mul_[a * q_ + b] == 1) {
        inv_[a] = static_cast<Elem>(b);
        break;
      }
    }
  }
  // smallest generator of the multiplicative group
  const unsigned order = q_ - 1;
  const auto divs = prime_divisors(order);
  for (unsigned g = 1; g < q_; ++g) {
    bool ok = true;
    for (unsigned r : divs) {
      if (pow(static_cast<Elem>(g), order / r) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      primitive_ = static_cast<Elem>(g);
      break;
    }
  }
}

Elem Field::pow(Elem a, unsigned long e) const {
  Elem r = 1;
  Elem b = a;
  while (e > 0) {
    if (e & 1UL) r = mul(r, b);
    b = mul(b, b);
    e >>= 1UL;
  }
  return r;
}

Elem Field::from_int(long v) const {
  long m = v % static_cast<long>(p_);
  if (m < 0) m += p_;
  return static_cast<Elem>(m);
}

}  // namespace gtau
