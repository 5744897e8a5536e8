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

#include "partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>

namespace gtau {

Partition::Partition(std::vector<int> parts) {
  for (int p : parts) {
    if (p < 0) throw InvalidArgument("partition parts must be nonnegative");
    if (p > 0) parts_.push_back(p);
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int i) const {
  if (i < 1 || i > length()) return 0;
  return parts_[static_cast<std::size_t>(i - 1)];
}

Partition Partition::dual() const {
  if (parts_.empty()) return {};
  std::vector<int> d(static_cast<std::size_t>(parts_.front()), 0);
  for (int p : parts_) {
    for (int j = 0; j < p; ++j) ++d[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(d));
}

int Partition::multiplicity(int i) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

std::map<int, int> Partition::multiplicities() const {
  std::map<int, int> m;
  for (int p : parts_) ++m[p];
  return m;
}

long Partition::n() const {
  long r = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i) r += static_cast<long>(i) * parts_[i];
  return r;
}

int Partition::odd_parts() const {
  return static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [](int p) { return p % 2 == 1; }));
}

int Partition::arm(int i, int j) const { return part(i) - j; }

int Partition::leg(int i, int j) const {
  int below = 0;
  for (int r = i + 1; r <= length() && part(r) >= j; ++r) ++below;
  return below;
}

bool Partition::even_parts_even_mult() const {
  for (const auto& [p, m] : multiplicities()) {
    if (p % 2 == 0 && m % 2 == 1) return false;
  }
  return true;
}

bool Partition::odd_parts_even_mult() const {
  for (const auto& [p, m] : multiplicities()) {
    if (p % 2 == 1 && m % 2 == 1) return false;
  }
  return true;
}

bool Partition::all_parts_even() const {
  return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p % 2 == 0; });
}

Laurent Partition::c_poly() const {
  Laurent c(1);
  // boxes with zero arm are the row ends (i, lambda_i)
  for (int i = 1; i <= length(); ++i) {
    int l = leg(i, part(i));
    if (l % 2 == 0) c *= Laurent(1) - Laurent::t(l + 1);
  }
  return c;
}

bool Partition::contains(const Partition& mu) const {
  if (mu.length() > length()) return false;
  for (int i = 1; i <= mu.length(); ++i) {
    if (mu.part(i) > part(i)) return false;
  }
  return true;
}

std::string Partition::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out << ",";
    out << parts_[i];
  }
  out << "]";
  return out.str();
}

Partition Partition::parse(std::string_view text) {
  const std::string s(text);
  auto bad = [&](const std::string& why) { return InvalidArgument("bad partition '" + s + "': " + why); };
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw bad("expected [a,b,...]");
  const std::string body = s.substr(1, s.size() - 2);
  std::vector<int> parts;
  if (!body.empty()) {
    std::size_t pos = 0;
    while (true) {
      auto comma = body.find(',', pos);
      std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      if (tok.empty() || tok.size() > 6 ||
          !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }) ||
          tok[0] == '0') {
        throw bad("part '" + tok + "' is not a positive integer");
      }
      parts.push_back(std::stoi(tok));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>())) throw bad("parts must be weakly decreasing");
  return Partition(std::move(parts));
}

bool operator<(const Partition& a, const Partition& b) {
  const int sa = a.size();
  const int sb = b.size();
  if (sa != sb) return sa < sb;
  return a.parts_ > b.parts_;
}

PartitionStats partition_stats(const Partition& lambda) {
  PartitionStats s;
  s.dual = lambda.dual();
  s.multiplicities = lambda.multiplicities();
  s.n = lambda.n();
  s.o = lambda.odd_parts();
  s.length = lambda.length();
  s.size = lambda.size();
  return s;
}

Constraint parse_constraint(std::string_view name) {
  if (name == "all") return Constraint::kAll;
  if (name == "even-parts-even-mult") return Constraint::kEvenPartsEvenMult;
  if (name == "odd-parts-even-mult") return Constraint::kOddPartsEvenMult;
  if (name == "all-parts-even") return Constraint::kAllPartsEven;
  throw InvalidArgument("unknown partition constraint '" + std::string(name) + "'");
}

bool satisfies(const Partition& lambda, Constraint c) {
  switch (c) {
    case Constraint::kAll:
      return true;
    case Constraint::kEvenPartsEvenMult:
      return lambda.even_parts_even_mult();
    case Constraint::kOddPartsEvenMult:
      return lambda.odd_parts_even_mult();
    case Constraint::kAllPartsEven:
      return lambda.all_parts_even();
  }
  return false;
}

std::vector<Partition> enumerate_partitions(int n, Constraint c) {
  if (n < 0) throw InvalidArgument("partition size must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int max_part) {
    if (rest == 0) {
      Partition p(cur);
      if (satisfies(p, c)) out.push_back(std::move(p));
      return;
    }
    for (int k = std::min(rest, max_part); k >= 1; --k) {
      cur.push_back(k);
      rec(rest - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Partition> vertical_strip_covers(const Partition& mu, int r) {
  if (r < 0) throw InvalidArgument("strip size must be nonnegative");
  std::vector<Partition> out;
  const int rows = mu.length() + r;
  std::vector<int> lam(static_cast<std::size_t>(rows), 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i > rows) {
      if (left == 0) out.emplace_back(lam);
      return;
    }
    if (rows - i + 1 < left) return;
    for (int add = 1; add >= 0; --add) {
      if (add > left) continue;
      int v = mu.part(i) + add;
      if (i > 1 && v > lam[static_cast<std::size_t>(i - 2)]) continue;
      lam[static_cast<std::size_t>(i - 1)] = v;
      rec(i + 1, left - add);
    }
  };
  rec(1, r);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> horizontal_strip_removals(const Partition& lambda) {
  std::vector<Partition> out;
  const int rows = lambda.length();
  std::vector<int> mu(static_cast<std::size_t>(rows), 0);
  std::function<void(int)> rec = [&](int i) {
    if (i > rows) {
      out.emplace_back(mu);
      return;
    }
    for (int v = lambda.part(i); v >= lambda.part(i + 1); --v) {
      mu[static_cast<std::size_t>(i - 1)] = v;
      rec(i + 1);
    }
  };
  rec(1);
  return out;
}

}  // namespace gtau
