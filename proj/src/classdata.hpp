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

#ifndef GTAU_CLASSDATA_HPP
#define GTAU_CLASSDATA_HPP

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "exact.hpp"
#include "matrix.hpp"
#include "partition.hpp"
#include "poly.hpp"

namespace gtau {

/// Rational canonical form label of a GL(n, q) class: a map from monic
/// irreducible polynomials other than z to nonempty partitions.
class ClassData {
 public:
  using Map = std::map<Poly, Partition>;

  ClassData() = default;
  /// Validates every key and computes n = sum deg(phi) |lambda_phi|.
  ClassData(unsigned q, Map entries);

  int n() const { return n_; }
  /// 0 for the empty class data.
  unsigned q() const { return q_; }
  const Map& entries() const { return entries_; }

  /// lambda_phi, empty when phi does not occur.
  Partition at(const Poly& phi) const;
  /// lambda_{z-1}.
  Partition unipotent_part() const;
  /// lambda_{z+1}; always empty in characteristic 2.
  Partition minus_one_part() const;
  /// lambda_phi = lambda_{phi-bar} for every phi.
  bool is_real() const;
  /// Every |lambda_phi| <= 1.
  bool is_regular_semisimple() const;
  /// The class data with the phi entry removed.
  ClassData without(const Poly& phi) const;

  /// `n=4; GF(3):2,1:[2,1]; GF(3):1,0,1:[1]`, keys in canonical order.
  std::string to_string() const;
  /// Accepts entries in any order; requires the declared n to match.
  static ClassData parse(std::string_view text);

  friend bool operator==(const ClassData& a, const ClassData& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const ClassData& a, const ClassData& b) { return !(a == b); }
  friend bool operator<(const ClassData& a, const ClassData& b);

 private:
  unsigned q_ = 0;
  int n_ = 0;
  Map entries_;
};

/// Class data of an invertible matrix from nullities of powers of phi(A).
ClassData classify_rcf(const Matrix& a);

/// Block-diagonal representative built from companion matrices of phi^k,
/// one block per part k of lambda_phi.
Matrix class_representative(const ClassData& c);

/// |C_GL(h)| = prod_phi Q^{2n(lambda)+|lambda|} prod_i (1/Q)_{m_i(lambda)}, Q = q^{deg phi}.
Integer centralizer_size(const ClassData& c);
Integer centralizer_size(const ClassData& c, unsigned q);
/// |GL(n, q)| / centralizer_size.
Integer class_size(const ClassData& c);

enum class ClassPredicate { kAll, kReal, kRegularSemisimple };
ClassPredicate parse_class_predicate(std::string_view name);

/// All class data of size n over F_q satisfying the predicate, in canonical
/// order. Throws CapExceeded when q^n exceeds the irreducible enumeration cap.
std::vector<ClassData> enumerate_class_data(int n, unsigned q, ClassPredicate pred = ClassPredicate::kAll);
void for_each_class_data(int n, unsigned q, ClassPredicate pred, const std::function<void(const ClassData&)>& visit);

}  // namespace gtau

#endif  // GTAU_CLASSDATA_HPP
