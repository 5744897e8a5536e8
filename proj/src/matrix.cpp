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

#include "matrix.hpp"

#include <atomic>
#include <cstdlib>
#include <sstream>

namespace gtau {

Matrix::Matrix(FieldPtr f, int n) : field_(std::move(f)), n_(n), a_(static_cast<std::size_t>(n * n), 0) {
  if (n < 0) throw InvalidArgument("matrix size must be nonnegative");
}

Matrix::Matrix(FieldPtr f, int n, std::vector<Elem> entries) : field_(std::move(f)), n_(n), a_(std::move(entries)) {
  if (a_.size() != static_cast<std::size_t>(n * n)) throw InvalidArgument("entry count does not match n^2");
  for (Elem e : a_) {
    if (e >= field_->q()) throw InvalidArgument("matrix entry outside the field");
  }
}

Matrix Matrix::identity(FieldPtr f, int n) {
  Matrix m(std::move(f), n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(FieldPtr f, const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<Elem> e;
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != n) throw InvalidArgument("matrix must be square");
    for (int v : r) {
      if (v < 0 || v >= static_cast<int>(f->q())) throw InvalidArgument("matrix entry outside the field");
      e.push_back(static_cast<Elem>(v));
    }
  }
  return {std::move(f), n, std::move(e)};
}

Matrix Matrix::standard_alternating(FieldPtr f, int n) {
  if (n % 2 != 0) throw InvalidArgument("alternating forms need even n");
  Matrix j(f, n);
  const int m = n / 2;
  for (int i = 0; i < m; ++i) {
    j.at(i, m + i) = 1;
    j.at(m + i, i) = f->minus_one();
  }
  return j;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) t.at(j, i) = (*this)(i, j);
  }
  return t;
}

Matrix Matrix::scaled(Elem c) const {
  Matrix r = *this;
  for (auto& e : r.a_) e = field_->mul(e, c);
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  const Field& f = *a.field_;
  const int n = a.n_;
  Matrix r(a.field_, n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const Elem x = a(i, k);
      if (x == 0) continue;
      for (int j = 0; j < n; ++j) r.at(i, j) = f.add(r(i, j), f.mul(x, b(k, j)));
    }
  }
  return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  Matrix r = a;
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = a.field_->add(a.a_[i], b.a_[i]);
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  Matrix r = a;
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = a.field_->sub(a.a_[i], b.a_[i]);
  return r;
}

Elem Matrix::det() const {
  const Field& f = *field_;
  std::vector<Elem> m = a_;
  const int n = n_;
  Elem d = 1;
  auto at = [&](int i, int j) -> Elem& { return m[static_cast<std::size_t>(i * n + j)]; };
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && at(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (int j = 0; j < n; ++j) std::swap(at(p, j), at(c, j));
      d = f.neg(d);
    }
    const Elem piv = at(c, c);
    d = f.mul(d, piv);
    const Elem inv = f.inv(piv);
    for (int i = c + 1; i < n; ++i) {
      const Elem factor = f.mul(at(i, c), inv);
      if (factor == 0) continue;
      for (int j = c; j < n; ++j) at(i, j) = f.sub(at(i, j), f.mul(factor, at(c, j)));
    }
  }
  return d;
}

int Matrix::rank() const {
  const Field& f = *field_;
  std::vector<Elem> m = a_;
  const int n = n_;
  auto at = [&](int i, int j) -> Elem& { return m[static_cast<std::size_t>(i * n + j)]; };
  int r = 0;
  for (int c = 0; c < n && r < n; ++c) {
    int p = r;
    while (p < n && at(p, c) == 0) ++p;
    if (p == n) continue;
    for (int j = 0; j < n; ++j) std::swap(at(p, j), at(r, j));
    const Elem inv = f.inv(at(r, c));
    for (int i = r + 1; i < n; ++i) {
      const Elem factor = f.mul(at(i, c), inv);
      if (factor == 0) continue;
      for (int j = c; j < n; ++j) at(i, j) = f.sub(at(i, j), f.mul(factor, at(r, j)));
    }
    ++r;
  }
  return r;
}

Matrix Matrix::inverse() const {
  const Field& f = *field_;
  const int n = n_;
  Matrix m = *this;
  Matrix inv = identity(field_, n);
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) throw InvalidArgument("matrix is singular");
    if (p != c) {
      for (int j = 0; j < n; ++j) {
        std::swap(m.at(p, j), m.at(c, j));
        std::swap(inv.at(p, j), inv.at(c, j));
      }
    }
    const Elem s = f.inv(m(c, c));
    for (int j = 0; j < n; ++j) {
      m.at(c, j) = f.mul(m(c, j), s);
      inv.at(c, j) = f.mul(inv(c, j), s);
    }
    for (int i = 0; i < n; ++i) {
      if (i == c) continue;
      const Elem factor = m(i, c);
      if (factor == 0) continue;
      for (int j = 0; j < n; ++j) {
        m.at(i, j) = f.sub(m(i, j), f.mul(factor, m(c, j)));
        inv.at(i, j) = f.sub(inv(i, j), f.mul(factor, inv(c, j)));
      }
    }
  }
  return inv;
}

Poly Matrix::charpoly() const {
  const Field& f = *field_;
  const int n = n_;
  Matrix h = *this;
  // similarity reduction to upper Hessenberg form
  for (int c = 0; c + 2 < n; ++c) {
    int p = c + 1;
    while (p < n && h(p, c) == 0) ++p;
    if (p == n) continue;
    if (p != c + 1) {
      for (int j = 0; j < n; ++j) std::swap(h.at(p, j), h.at(c + 1, j));
      for (int i = 0; i < n; ++i) std::swap(h.at(i, p), h.at(i, c + 1));
    }
    const Elem inv = f.inv(h(c + 1, c));
    for (int i = c + 2; i < n; ++i) {
      const Elem factor = f.mul(h(i, c), inv);
      if (factor == 0) continue;
      for (int j = 0; j < n; ++j) h.at(i, j) = f.sub(h(i, j), f.mul(factor, h(c + 1, j)));
      for (int r = 0; r < n; ++r) h.at(r, c + 1) = f.add(h(r, c + 1), f.mul(factor, h(r, i)));
    }
  }
  // p_m = (z - h_mm) p_{m-1} - sum_{i<m} h_im (prod_{j=i+1..m} h_{j,j-1}) p_{i-1}, 1-indexed
  auto H = [&](int i, int j) { return h(i - 1, j - 1); };
  std::vector<Poly> p;
  p.push_back(Poly::constant(field_, 1));
  const Poly z = Poly::z(field_);
  for (int m = 1; m <= n; ++m) {
    Poly next = (z - Poly::constant(field_, H(m, m))) * p[static_cast<std::size_t>(m - 1)];
    Elem prod = 1;
    for (int i = m - 1; i >= 1; --i) {
      prod = f.mul(prod, H(i + 1, i));
      if (prod == 0) break;
      const Elem coef = f.mul(H(i, m), prod);
      if (coef != 0) next = next - p[static_cast<std::size_t>(i - 1)].scaled(coef);
    }
    p.push_back(std::move(next));
  }
  return p.back();
}

std::string Matrix::to_string() const {
  std::ostringstream out;
  out << "[";
  for (int i = 0; i < n_; ++i) {
    out << (i ? ",[" : "[");
    for (int j = 0; j < n_; ++j) out << (j ? "," : "") << static_cast<unsigned>((*this)(i, j));
    out << "]";
  }
  out << "]";
  return out.str();
}

Matrix eval_poly(const Poly& f, const Matrix& a) {
  Matrix r(a.field_ptr(), a.n());
  const Matrix id = Matrix::identity(a.field_ptr(), a.n());
  for (int d = f.degree(); d >= 0; --d) r = r * a + id.scaled(f.coeff(d));
  return r;
}

Matrix companion(const Poly& f) {
  const int d = f.degree();
  if (d < 1 || !f.is_monic()) throw InvalidArgument("companion matrix needs a monic polynomial of degree >= 1");
  Matrix c(f.field_ptr(), d);
  for (int i = 1; i < d; ++i) c.at(i, i - 1) = 1;
  for (int i = 0; i < d; ++i) c.at(i, d - 1) = f.field().neg(f.coeff(i));
  return c;
}

Matrix block_diagonal(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) throw InvalidArgument("no blocks");
  int n = 0;
  for (const auto& b : blocks) n += b.n();
  Matrix r(blocks.front().field_ptr(), n);
  int off = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.n(); ++i) {
      for (int j = 0; j < b.n(); ++j) r.at(off + i, off + j) = b(i, j);
    }
    off += b.n();
  }
  return r;
}

MatrixCodec::MatrixCodec(FieldPtr f, int n) : field_(std::move(f)), n_(n) {
  if (!fits(field_->q(), n)) throw CapExceeded("matrix space too large for integer codes");
  space_ = 1;
  for (int i = 0; i < n * n; ++i) space_ *= field_->q();
}

bool MatrixCodec::fits(unsigned q, int n) {
  return ipow(Integer(q), static_cast<unsigned long>(n * n)) < ipow(Integer(2), 63);
}

std::uint64_t MatrixCodec::encode(const Matrix& m) const {
  std::uint64_t c = 0;
  const auto& e = m.entries();
  for (auto it = e.rbegin(); it != e.rend(); ++it) c = c * field_->q() + *it;
  return c;
}

Matrix MatrixCodec::decode(std::uint64_t code) const {
  std::vector<Elem> e(static_cast<std::size_t>(n_ * n_));
  for (auto& x : e) {
    x = static_cast<Elem>(code % field_->q());
    code /= field_->q();
  }
  return {field_, n_, std::move(e)};
}

GroupKind parse_group_kind(std::string_view name) {
  if (name == "GL" || name == "gl") return GroupKind::kGL;
  if (name == "SL" || name == "sl") return GroupKind::kSL;
  if (name == "Sp" || name == "sp") return GroupKind::kSp;
  throw InvalidArgument("unknown group kind '" + std::string(name) + "'");
}

std::string group_kind_name(GroupKind k) {
  switch (k) {
    case GroupKind::kGL:
      return "GL";
    case GroupKind::kSL:
      return "SL";
    case GroupKind::kSp:
      return "Sp";
  }
  return "?";
}

Integer gl_order(int n, const Integer& q) {
  Integer r = ipow(q, static_cast<unsigned long>(n * (n - 1) / 2));
  for (int i = 1; i <= n; ++i) r *= ipow(q, static_cast<unsigned long>(i)) - 1;
  return r;
}

Integer sl_order(int n, const Integer& q) { return gl_order(n, q) / (q - 1); }

Integer sp_order(int n, const Integer& q) {
  if (n % 2 != 0) throw InvalidArgument("Sp needs even n");
  const int m = n / 2;
  Integer r = ipow(q, static_cast<unsigned long>(m * m));
  for (int i = 1; i <= m; ++i) r *= ipow(q, static_cast<unsigned long>(2 * i)) - 1;
  return r;
}

Integer unitary_order(int n, const Integer& q) {
  Integer r = ipow(q, static_cast<unsigned long>(n * (n - 1) / 2));
  for (int i = 1; i <= n; ++i) {
    Integer qi = ipow(q, static_cast<unsigned long>(i));
    r *= i % 2 == 0 ? Integer(qi - 1) : Integer(qi + 1);
  }
  return r;
}

Integer group_order(GroupKind k, int n, unsigned q) {
  switch (k) {
    case GroupKind::kGL:
      return gl_order(n, q);
    case GroupKind::kSL:
      return sl_order(n, q);
    case GroupKind::kSp:
      return sp_order(n, q);
  }
  return 0;
}

namespace {

std::uint64_t initial_cap() {
  if (const char* env = std::getenv("GTAU_ENUM_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 30000000ULL;
}

std::atomic<std::uint64_t>& cap_ref() {
  static std::atomic<std::uint64_t> cap{initial_cap()};
  return cap;
}

// Vector with index idx in base q, entry j = digit j.
void decode_vector(std::uint64_t idx, unsigned q, std::vector<Elem>& v) {
  for (auto& x : v) {
    x = static_cast<Elem>(idx % q);
    idx /= q;
  }
}

struct Echelon {
  std::vector<std::pair<int, std::vector<Elem>>> rows;

  // Reduces v in place; returns the pivot of the remainder or -1.
  int reduce(std::vector<Elem>& v, const Field& f) const {
    for (const auto& [p, b] : rows) {
      const Elem c = v[static_cast<std::size_t>(p)];
      if (c == 0) continue;
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = f.sub(v[j], f.mul(c, b[j]));
    }
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j] != 0) return static_cast<int>(j);
    }
    return -1;
  }
};

}  // namespace

std::uint64_t enumeration_cap() { return cap_ref().load(); }

void set_enumeration_cap(std::uint64_t cap) {
  if (cap == 0) throw InvalidArgument("enumeration cap must be positive");
  cap_ref().store(cap);
}

void require_enumerable(GroupKind k, int n, unsigned q) {
  if (n < 1) throw InvalidArgument("n must be >= 1");
  if (k == GroupKind::kSp && n % 2 != 0) throw InvalidArgument("Sp needs even n");
  Field::get(q);
  const Integer order = group_order(k, n, q);
  if (order > Integer(std::to_string(enumeration_cap()))) {
    throw CapExceeded("|" + group_kind_name(k) + "(" + std::to_string(n) + "," + std::to_string(q) +
                      ")| = " + order.get_str() + " exceeds the enumeration cap " +
                      std::to_string(enumeration_cap()));
  }
}

void for_each_element(GroupKind k, int n, unsigned q, const std::function<void(const Matrix&)>& visit,
                      IndexRange range, const std::optional<Matrix>& form) {
  require_enumerable(k, n, q);
  FieldPtr fp = Field::get(q);
  const Field& f = *fp;
  std::uint64_t vectors = 1;
  for (int i = 0; i < n; ++i) vectors *= q;
  const std::uint64_t lo = std::min(range.begin, vectors);
  const std::uint64_t hi = std::min(range.end, vectors);
  Matrix m(fp, n);

  if (k == GroupKind::kSp) {
    const Matrix F = form ? *form : Matrix::standard_alternating(fp, n);
    if (F.n() != n) throw InvalidArgument("form size mismatch");
    std::vector<std::vector<Elem>> cols(static_cast<std::size_t>(n), std::vector<Elem>(static_cast<std::size_t>(n)));
    std::vector<std::vector<Elem>> fcols(static_cast<std::size_t>(n), std::vector<Elem>(static_cast<std::size_t>(n)));
    // B(u, v) = u' F v
    auto times_form = [&](const std::vector<Elem>& v, std::vector<Elem>& out) {
      for (int i = 0; i < n; ++i) {
        Elem s = 0;
        for (int j = 0; j < n; ++j) s = f.add(s, f.mul(F(i, j), v[static_cast<std::size_t>(j)]));
        out[static_cast<std::size_t>(i)] = s;
      }
    };
    auto pair = [&](const std::vector<Elem>& u, const std::vector<Elem>& fv) {
      Elem s = 0;
      for (int i = 0; i < n; ++i) s = f.add(s, f.mul(u[static_cast<std::size_t>(i)], fv[static_cast<std::size_t>(i)]));
      return s;
    };
    std::function<void(int)> rec = [&](int c) {
      if (c == n) {
        for (int i = 0; i < n; ++i) {
          for (int j = 0; j < n; ++j) m.at(i, j) = cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
        }
        visit(m);
        return;
      }
      const std::uint64_t a = c == 0 ? lo : 0;
      const std::uint64_t b = c == 0 ? hi : vectors;
      auto& v = cols[static_cast<std::size_t>(c)];
      auto& fv = fcols[static_cast<std::size_t>(c)];
      for (std::uint64_t idx = a; idx < b; ++idx) {
        decode_vector(idx, q, v);
        times_form(v, fv);
        if (pair(v, fv) != F(c, c)) continue;
        bool ok = true;
        for (int i = 0; i < c && ok; ++i) {
          // B(c_i, c_c) = F_ic
          ok = pair(cols[static_cast<std::size_t>(i)], fv) == F(i, c);
        }
        if (ok) rec(c + 1);
      }
    };
    rec(0);
    return;
  }

  std::vector<Echelon> stack(static_cast<std::size_t>(n) + 1);
  std::vector<Elem> v(static_cast<std::size_t>(n));
  std::function<void(int)> rec = [&](int r) {
    if (r == n) {
      if (k == GroupKind::kSL && m.det() != 1) return;
      visit(m);
      return;
    }
    const std::uint64_t a = r == 0 ? lo : 0;
    const std::uint64_t b = r == 0 ? hi : vectors;
    for (std::uint64_t idx = a; idx < b; ++idx) {
      decode_vector(idx, q, v);
      std::vector<Elem> w = v;
      const int piv = stack[static_cast<std::size_t>(r)].reduce(w, f);
      if (piv < 0) continue;
      const Elem s = f.inv(w[static_cast<std::size_t>(piv)]);
      for (auto& x : w) x = f.mul(x, s);
      stack[static_cast<std::size_t>(r) + 1] = stack[static_cast<std::size_t>(r)];
      stack[static_cast<std::size_t>(r) + 1].rows.emplace_back(piv, std::move(w));
      for (int j = 0; j < n; ++j) m.at(r, j) = v[static_cast<std::size_t>(j)];
      rec(r + 1);
    }
  };
  rec(0);
}

std::vector<Matrix> enumerate_group(GroupKind k, int n, unsigned q) {
  std::vector<Matrix> out;
  for_each_element(k, n, q, [&](const Matrix& m) { out.push_back(m); });
  return out;
}

Matrix random_gl(FieldPtr f, int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<unsigned> d(0, f->q() - 1);
  while (true) {
    std::vector<Elem> e(static_cast<std::size_t>(n * n));
    for (auto& x : e) x = static_cast<Elem>(d(rng));
    Matrix m(f, n, std::move(e));
    if (m.invertible()) return m;
  }
}

}  // namespace gtau
