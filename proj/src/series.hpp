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

#ifndef GTAU_SERIES_HPP
#define GTAU_SERIES_HPP

#include <cstddef>
#include <vector>

#include "exact.hpp"

namespace gtau {

/// Univariate power series in u truncated after u^N. The coefficient type
/// only needs ring operations; `inverse()` additionally needs division by
/// the constant term.
template <class C>
class TruncSeries {
 public:
  explicit TruncSeries(int degree, C constant = C(0))
      : coeffs_(static_cast<std::size_t>(degree) + 1, C(0)) {
    if (degree < 0) throw InvalidArgument("negative truncation degree");
    coeffs_[0] = constant;
  }

  static TruncSeries one(int degree) { return TruncSeries(degree, C(1)); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const C& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  C& operator[](int i) { return coeffs_[static_cast<std::size_t>(i)]; }
  const std::vector<C>& coefficients() const { return coeffs_; }

  TruncSeries& operator+=(const TruncSeries& o) {
    check_same(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }

  TruncSeries& operator-=(const TruncSeries& o) {
    check_same(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }

  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    a.check_same(b);
    TruncSeries r(a.degree());
    const int n = a.degree();
    for (int i = 0; i <= n; ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; i + j <= n; ++j) {
        if (b[j] == 0) continue;
        r[i + j] += a[i] * b[j];
      }
    }
    return r;
  }

  TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }

  /// *= (1 + a u^k)
  TruncSeries& mul_binomial(const C& a, int k) {
    if (k <= 0) throw InvalidArgument("binomial factor needs k >= 1");
    for (int i = degree(); i >= k; --i) (*this)[i] += a * (*this)[i - k];
    return *this;
  }

  /// /= (1 - a u^k), i.e. *= sum_j a^j u^{jk}
  TruncSeries& div_one_minus(const C& a, int k) {
    if (k <= 0) throw InvalidArgument("geometric factor needs k >= 1");
    for (int i = k; i <= degree(); ++i) (*this)[i] += a * (*this)[i - k];
    return *this;
  }

  /// Multiplicative inverse; the constant term must be invertible.
  TruncSeries inverse() const {
    if (coeffs_[0] == 0) throw InvalidArgument("series inverse needs a unit constant term");
    TruncSeries r(degree());
    r[0] = C(1) / coeffs_[0];
    for (int n = 1; n <= degree(); ++n) {
      C acc(0);
      for (int k = 1; k <= n; ++k) acc += (*this)[k] * r[n - k];
      r[n] = -acc / coeffs_[0];
    }
    return r;
  }

  TruncSeries pow(unsigned e) const {
    TruncSeries r = one(degree());
    for (unsigned i = 0; i < e; ++i) r *= *this;
    return r;
  }

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void check_same(const TruncSeries& o) const {
    if (o.coeffs_.size() != coeffs_.size()) throw InvalidArgument("series truncation mismatch");
  }
  std::vector<C> coeffs_;
};

using RationalSeries = TruncSeries<Rational>;
using IntegerSeries = TruncSeries<Integer>;

}  // namespace gtau

#endif  // GTAU_SERIES_HPP
