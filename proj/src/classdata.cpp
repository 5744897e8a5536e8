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

#include "classdata.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace gtau {

ClassData::ClassData(unsigned q, Map entries) : q_(q) {
  FieldPtr field = Field::get(q);
  for (auto& [phi, lambda] : entries) {
    if (phi.field().q() != q) throw InvalidArgument("class data mixes fields");
    if (!phi.is_monic()) throw InvalidArgument("class data key " + phi.to_string() + " is not monic");
    if (phi.constant_term() == 0) throw InvalidArgument("class data key " + phi.to_string() + " vanishes at 0");
    if (!is_irreducible(phi)) throw InvalidArgument("class data key " + phi.to_string() + " is reducible");
    if (lambda.empty()) continue;
    n_ += phi.degree() * lambda.size();
    entries_.emplace(phi, lambda);
  }
}

Partition ClassData::at(const Poly& phi) const {
  auto it = entries_.find(phi);
  return it == entries_.end() ? Partition() : it->second;
}

Partition ClassData::unipotent_part() const {
  if (q_ == 0) return {};
  FieldPtr f = Field::get(q_);
  return at(Poly::linear(f, 1));
}

Partition ClassData::minus_one_part() const {
  if (q_ == 0) return {};
  FieldPtr f = Field::get(q_);
  if (f->even_characteristic()) return {};
  return at(Poly::linear(f, f->minus_one()));
}

bool ClassData::is_real() const {
  for (const auto& [phi, lambda] : entries_) {
    if (at(conjugate_poly(phi)) != lambda) return false;
  }
  return true;
}

bool ClassData::is_regular_semisimple() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.second.size() <= 1; });
}

ClassData ClassData::without(const Poly& phi) const {
  ClassData r = *this;
  if (auto it = r.entries_.find(phi); it != r.entries_.end()) {
    r.n_ -= phi.degree() * it->second.size();
    r.entries_.erase(it);
  }
  if (r.entries_.empty()) r.q_ = 0;
  return r;
}

std::string ClassData::to_string() const {
  std::ostringstream out;
  out << "n=" << n_;
  for (const auto& [phi, lambda] : entries_) out << "; " << phi.to_string() << ":" << lambda.to_string();
  return out.str();
}

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a])) != 0) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1])) != 0) --b;
  return std::string(s.substr(a, b - a));
}

}  // namespace

ClassData ClassData::parse(std::string_view text) {
  const std::string s(text);
  auto bad = [&](const std::string& why) { return InvalidArgument("bad class data '" + s + "': " + why); };
  std::vector<std::string> fields;
  std::size_t pos = 0;
  while (true) {
    auto semi = s.find(';', pos);
    fields.push_back(trim(std::string_view(s).substr(pos, semi == std::string::npos ? std::string::npos : semi - pos)));
    if (semi == std::string::npos) break;
    pos = semi + 1;
  }
  const std::string& head = fields.front();
  if (head.rfind("n=", 0) != 0) throw bad("expected leading n=<size>");
  const std::string ns = head.substr(2);
  if (ns.empty() || ns.size() > 6 ||
      !std::all_of(ns.begin(), ns.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }) ||
      (ns.size() > 1 && ns[0] == '0')) {
    throw bad("n is not a nonnegative integer");
  }
  const int n = std::stoi(ns);
  Map entries;
  unsigned q = 0;
  for (std::size_t i = 1; i < fields.size(); ++i) {
    const std::string& e = fields[i];
    auto sep = e.rfind(":[");
    if (sep == std::string::npos) throw bad("entry '" + e + "' lacks :[partition]");
    Poly phi = Poly::parse(e.substr(0, sep));
    Partition lambda = Partition::parse(e.substr(sep + 1));
    if (lambda.empty()) throw bad("entry '" + e + "' has an empty partition");
    if (q != 0 && phi.field().q() != q) throw bad("entries over different fields");
    q = phi.field().q();
    if (!entries.emplace(phi, lambda).second) throw bad("repeated key " + phi.to_string());
  }
  if (entries.empty()) {
    if (n != 0) throw bad("no entries but n=" + ns);
    return {};
  }
  ClassData c(q, std::move(entries));
  if (c.n() != n) throw bad("entries have total size " + std::to_string(c.n()) + ", not " + ns);
  return c;
}

bool operator<(const ClassData& a, const ClassData& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  return a.entries_ < b.entries_;
}

namespace {

Poly power(const Poly& phi, int k) {
  Poly r = Poly::constant(phi.field_ptr(), 1);
  for (int i = 0; i < k; ++i) r = r * phi;
  return r;
}

}  // namespace

ClassData classify_rcf(const Matrix& a) {
  if (!a.invertible()) throw InvalidArgument("classify_rcf needs an invertible matrix");
  if (a.n() == 0) return {};
  ClassData::Map entries;
  for (const auto& [phi, mult] : factor_monic(a.charpoly())) {
    const int d = phi.degree();
    const Matrix p = eval_poly(phi, a);
    Matrix pk = p;
    std::vector<int> dual;
    int prev = 0;
    while (prev < d * mult) {
      const int null = pk.nullity();
      if ((null - prev) % d != 0 || null == prev) throw InternalError("nullity sequence inconsistent for " + phi.to_string());
      dual.push_back((null - prev) / d);
      prev = null;
      pk = pk * p;
    }
    entries.emplace(phi, Partition(dual).dual());
  }
  return {a.field().q(), std::move(entries)};
}

Matrix class_representative(const ClassData& c) {
  if (c.n() == 0) throw InvalidArgument("empty class data has no representative");
  std::vector<Matrix> blocks;
  for (const auto& [phi, lambda] : c.entries()) {
    for (int k : lambda.parts()) blocks.push_back(companion(power(phi, k)));
  }
  return block_diagonal(blocks);
}

Integer centralizer_size(const ClassData& c, unsigned q) {
  Rational r = 1;
  for (const auto& [phi, lambda] : c.entries()) {
    const Rational Q = rpow(Rational(q), phi.degree());
    r *= rpow(Q, 2 * lambda.n() + lambda.size());
    for (const auto& [part, m] : lambda.multiplicities()) {
      for (int j = 1; j <= m; ++j) r *= 1 - rpow(Q, -j);
    }
  }
  return require_integer(r, "centralizer size");
}

Integer centralizer_size(const ClassData& c) { return centralizer_size(c, c.q()); }

Integer class_size(const ClassData& c) {
  if (c.n() == 0) return 1;
  return gl_order(c.n(), c.q()) / centralizer_size(c);
}

ClassPredicate parse_class_predicate(std::string_view name) {
  if (name == "all") return ClassPredicate::kAll;
  if (name == "real") return ClassPredicate::kReal;
  if (name == "regular-semisimple" || name == "rs") return ClassPredicate::kRegularSemisimple;
  throw InvalidArgument("unknown class predicate '" + std::string(name) + "'");
}

void for_each_class_data(int n, unsigned q, ClassPredicate pred, const std::function<void(const ClassData&)>& visit) {
  if (n < 0) throw InvalidArgument("n must be >= 0");
  FieldPtr field = Field::get(q);
  if (ipow(Integer(q), static_cast<unsigned long>(n)) > 2000000) {
    throw CapExceeded("class data enumeration needs q^n <= 2e6");
  }
  std::vector<Poly> irr;
  for (int d = 1; d <= n; ++d) {
    for (const Poly& p : irreducibles_of_degree(q, d)) irr.push_back(p);
  }
  std::map<Poly, Partition> cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int rest) {
    if (rest == 0) {
      visit(cur.empty() ? ClassData() : ClassData(q, cur));
      return;
    }
    if (i == irr.size()) return;
    const Poly& phi = irr[i];
    const int d = phi.degree();
    if (d > rest) return;  // degrees are nondecreasing along irr
    int weight = 1;
    bool skip = false;
    Poly partner;
    if (pred == ClassPredicate::kReal) {
      partner = conjugate_poly(phi);
      if (partner < phi) skip = true;  // already fixed by its conjugate
      if (partner != phi) weight = 2;
    }
    if (skip) {
      rec(i + 1, rest);  // its size was charged together with the partner
      return;
    }
    rec(i + 1, rest);
    const int max_size = pred == ClassPredicate::kRegularSemisimple ? 1 : rest / (d * weight);
    for (int s = 1; s <= max_size && d * weight * s <= rest; ++s) {
      for (const Partition& lambda : enumerate_partitions(s)) {
        cur[phi] = lambda;
        if (weight == 2) cur[partner] = lambda;
        rec(i + 1, rest - d * weight * s);
        cur.erase(phi);
        if (weight == 2) cur.erase(partner);
      }
    }
  };
  rec(0, n);
}

std::vector<ClassData> enumerate_class_data(int n, unsigned q, ClassPredicate pred) {
  std::vector<ClassData> out;
  for_each_class_data(n, q, pred, [&](const ClassData& c) { out.push_back(c); });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gtau
