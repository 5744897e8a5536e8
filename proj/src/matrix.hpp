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

#ifndef GTAU_MATRIX_HPP
#define GTAU_MATRIX_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "exact.hpp"
#include "field.hpp"
#include "poly.hpp"

namespace gtau {

/// Square matrix over F_q, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldPtr f, int n);  // zero matrix
  Matrix(FieldPtr f, int n, std::vector<Elem> entries);

  static Matrix identity(FieldPtr f, int n);
  /// Rows of integers in [0, q).
  static Matrix from_rows(FieldPtr f, const std::vector<std::vector<int>>& rows);
  /// The alternating form [[0, I], [-I, 0]].
  static Matrix standard_alternating(FieldPtr f, int n);

  int n() const { return n_; }
  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  const std::vector<Elem>& entries() const { return a_; }

  Elem operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * n_ + j)]; }
  Elem& at(int i, int j) { return a_[static_cast<std::size_t>(i * n_ + j)]; }

  Matrix transpose() const;
  Matrix scaled(Elem c) const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) { return a.n_ == b.n_ && a.a_ == b.a_; }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }
  friend bool operator<(const Matrix& a, const Matrix& b) { return a.a_ < b.a_; }

  Elem det() const;
  int rank() const;
  int nullity() const { return n_ - rank(); }
  bool invertible() const { return rank() == n_; }
  /// Throws InvalidArgument when singular.
  Matrix inverse() const;
  /// g^tau = (g')^{-1}.
  Matrix tau() const { return transpose().inverse(); }
  /// det(zI - A) via Hessenberg reduction.
  Poly charpoly() const;

  std::string to_string() const;  // [[a,b],[c,d]]

 private:
  FieldPtr field_;
  int n_ = 0;
  std::vector<Elem> a_;
};

/// f(A) by Horner's rule.
Matrix eval_poly(const Poly& f, const Matrix& a);
/// Companion matrix of a monic polynomial of degree >= 1.
Matrix companion(const Poly& f);
Matrix block_diagonal(const std::vector<Matrix>& blocks);

/// Base-q integer codes for matrices with q^{n^2} < 2^63.
class MatrixCodec {
 public:
  MatrixCodec(FieldPtr f, int n);
  static bool fits(unsigned q, int n);
  std::uint64_t encode(const Matrix& m) const;
  Matrix decode(std::uint64_t code) const;
  std::uint64_t space() const { return space_; }

 private:
  FieldPtr field_;
  int n_;
  std::uint64_t space_;
};

enum class GroupKind { kGL, kSL, kSp };
GroupKind parse_group_kind(std::string_view name);
std::string group_kind_name(GroupKind k);

Integer gl_order(int n, const Integer& q);
Integer sl_order(int n, const Integer& q);
/// |Sp(n, q)| for even n.
Integer sp_order(int n, const Integer& q);
/// |U(n, q)| = q^{n(n-1)/2} prod_{i=1..n} (q^i - (-1)^i).
Integer unitary_order(int n, const Integer& q);
Integer group_order(GroupKind k, int n, unsigned q);

/// Upper bound on enumerated group sizes (default 3e7, overridable by the
/// GTAU_ENUM_CAP environment variable on first use).
std::uint64_t enumeration_cap();
void set_enumeration_cap(std::uint64_t cap);
/// Throws CapExceeded when the order exceeds the cap.
void require_enumerable(GroupKind k, int n, unsigned q);

/// Restricts enumeration to elements whose first row (GL, SL) or first
/// column (Sp) has index in [begin, end) among the q^n vectors.
struct IndexRange {
  std::uint64_t begin = 0;
  std::uint64_t end = UINT64_MAX;
};

/// Visits every element exactly once, in a fixed order. For Sp the form
/// defaults to the standard alternating one.
void for_each_element(GroupKind k, int n, unsigned q, const std::function<void(const Matrix&)>& visit,
                      IndexRange range = {}, const std::optional<Matrix>& form = std::nullopt);

std::vector<Matrix> enumerate_group(GroupKind k, int n, unsigned q);

/// Uniform element of GL(n, q) by rejection from uniform matrices.
Matrix random_gl(FieldPtr f, int n, std::mt19937_64& rng);

}  // namespace gtau

#endif  // GTAU_MATRIX_HPP
