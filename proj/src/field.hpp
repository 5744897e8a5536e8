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

#ifndef GTAU_FIELD_HPP
#define GTAU_FIELD_HPP

#include <cstdint>
#include <memory>
#include <vector>

namespace gtau {

using Elem = std::uint8_t;

/// The finite field F_q, q = p^k, with full addition and multiplication
/// tables. Element e in [0, q) encodes the coordinates of e in the
/// polynomial basis 1, a, a^2, ... over F_p, least significant digit first in
/// base p, where a is a root of the fixed modulus returned by `modulus()`.
///
/// Moduli (ascending coefficients over F_p):
///   GF(4)  x^2+x+1    GF(8)  x^3+x+1    GF(16) x^4+x+1    GF(9) x^2+2x+2
/// Other prime powers use the lexicographically smallest primitive monic
/// polynomial of degree k.
class Field {
 public:
  /// Shared, immutable instance for q. Throws InvalidArgument if q is not a
  /// prime power or exceeds the configured cap.
  static std::shared_ptr<const Field> get(unsigned q);

  /// Upper bound on q accepted by `get` (default 16, hard limit 256).
  static unsigned cap();
  static void set_cap(unsigned q);

  unsigned p() const { return p_; }
  unsigned k() const { return k_; }
  unsigned q() const { return q_; }
  bool even_characteristic() const { return p_ == 2; }

  const std::vector<unsigned>& modulus() const { return modulus_; }

  Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
  Elem sub(Elem a, Elem b) const { return add_[a * q_ + neg_[b]]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * q_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  /// a must be nonzero.
  Elem inv(Elem a) const { return inv_[a]; }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, unsigned long e) const;

  Elem one() const { return 1; }
  /// -1 (equal to 1 in characteristic 2).
  Elem minus_one() const { return neg_[1]; }
  /// A generator of the multiplicative group.
  Elem primitive() const { return primitive_; }
  /// The image of the integer v in the prime field.
  Elem from_int(long v) const;

  Field(unsigned p, unsigned k);

 private:
  unsigned p_;
  unsigned k_;
  unsigned q_;
  std::vector<unsigned> modulus_;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<Elem> neg_;
  std::vector<Elem> inv_;
  Elem primitive_ = 1;
};

using FieldPtr = std::shared_ptr<const Field>;

/// Decomposes q as p^k; returns false if q is not a prime power.
bool prime_power(unsigned q, unsigned& p, unsigned& k);

}  // namespace gtau

#endif  // GTAU_FIELD_HPP
