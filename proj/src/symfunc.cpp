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

#include "symfunc.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>
#include <tuple>
#include <vector>

#include "qseries.hpp"

namespace gtau {

SymSeries::SymSeries(int m, int maxdeg) : m_(m), maxdeg_(maxdeg) {
  if (m < 1) throw InvalidArgument("need at least one variable");
  if (maxdeg < 0) throw InvalidArgument("truncation degree must be nonnegative");
}

Laurent SymSeries::coeff(const Partition& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Laurent() : it->second;
}

void SymSeries::add_term(const Partition& alpha, const Laurent& c) {
  if (c.is_zero() || alpha.size() > maxdeg_ || alpha.length() > m_) return;
  auto [it, inserted] = terms_.emplace(alpha, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SymSeries& SymSeries::operator+=(const SymSeries& o) {
  if (o.m_ != m_) throw InvalidArgument("variable count mismatch");
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

SymSeries& SymSeries::operator-=(const SymSeries& o) {
  if (o.m_ != m_) throw InvalidArgument("variable count mismatch");
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

SymSeries& SymSeries::operator*=(const Laurent& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= c;
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

SymSeries SymSeries::eval_t(const Rational& t) const {
  SymSeries r(m_, maxdeg_);
  for (const auto& [k, c] : terms_) r.add_term(k, c.eval_t(t));
  return r;
}

std::string SymSeries::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << "(" << c.to_string() << ")*m" << k.to_string();
  }
  return out.str();
}

namespace {

using Exps = std::vector<int>;
using MPoly = std::map<Exps, Laurent>;

int degree_of(const Exps& e) { return std::accumulate(e.begin(), e.end(), 0); }

void madd(MPoly& p, const Exps& e, const Laurent& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = p.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

// maxdeg < 0 disables truncation.
MPoly mmul(const MPoly& a, const MPoly& b, int maxdeg) {
  MPoly r;
  for (const auto& [ea, ca] : a) {
    const int da = degree_of(ea);
    for (const auto& [eb, cb] : b) {
      if (maxdeg >= 0 && da + degree_of(eb) > maxdeg) continue;
      Exps e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      madd(r, e, ca * cb);
    }
  }
  return r;
}

// sum_k c^k x^{k e} truncated at total degree maxdeg
MPoly geometric(const Laurent& c, const Exps& e, int maxdeg) {
  MPoly r;
  const int d = degree_of(e);
  Laurent ck(1);
  Exps cur(e.size(), 0);
  for (int k = 0; k * d <= maxdeg; ++k) {
    madd(r, cur, ck);
    ck *= c;
    for (std::size_t i = 0; i < e.size(); ++i) cur[i] += e[i];
    if (d == 0) break;
  }
  return r;
}

// 1 + c x^e
MPoly binomial(const Laurent& c, const Exps& e) {
  MPoly r;
  madd(r, Exps(e.size(), 0), Laurent(1));
  madd(r, e, c);
  return r;
}

Exps unit(int m, int i) {
  Exps e(static_cast<std::size_t>(m), 0);
  e[static_cast<std::size_t>(i)] = 1;
  return e;
}

Exps pair_exps(int m, int i, int j) {
  Exps e(static_cast<std::size_t>(m), 0);
  e[static_cast<std::size_t>(i)] += 1;
  e[static_cast<std::size_t>(j)] += 1;
  return e;
}

// Extracts the monomial-basis coefficients of a symmetric polynomial.
SymSeries from_mpoly(const MPoly& p, int m, int maxdeg) {
  SymSeries s(m, maxdeg);
  for (const auto& [e, c] : p) {
    if (std::is_sorted(e.begin(), e.end(), std::greater<>())) s.add_term(Partition(e), c);
  }
  return s;
}

// All distinct rearrangements of the parts of alpha padded to length m.
std::vector<Exps> arrangements(const Partition& alpha, int m) {
  Exps e(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < alpha.length(); ++i) e[static_cast<std::size_t>(i)] = alpha.part(i + 1);
  std::sort(e.begin(), e.end());
  std::vector<Exps> out;
  do {
    out.push_back(e);
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

int inversions(const Exps& e) {
  int inv = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      if (e[i] < e[j]) ++inv;
    }
  }
  return inv;
}

// Exact quotient by (x_i - x_j).
MPoly divide_by_difference(MPoly work, int i, int j) {
  MPoly quo;
  const auto ui = static_cast<std::size_t>(i);
  const auto uj = static_cast<std::size_t>(j);
  int top = 0;
  for (const auto& kv : work) top = std::max(top, kv.first[ui]);
  for (int a = top; a >= 1; --a) {
    std::vector<Exps> keys;
    for (const auto& kv : work) {
      if (kv.first[ui] == a) keys.push_back(kv.first);
    }
    for (const auto& e : keys) {
      auto it = work.find(e);
      if (it == work.end()) continue;
      Laurent c = it->second;
      work.erase(it);
      Exps lower = e;
      --lower[ui];
      madd(quo, lower, c);
      ++lower[uj];
      madd(work, lower, c);
    }
  }
  if (!work.empty()) throw InternalError("Vandermonde division left a remainder");
  return quo;
}

Laurent v_factor(int k) {
  // prod_{j=1..k} (1 - t^j)/(1 - t)
  Laurent den(1);
  for (int j = 0; j < k; ++j) den *= Laurent(1) - Laurent::t();
  return t_factorial(static_cast<unsigned>(k)).divided_exact(den);
}

Laurent v_lambda(const Partition& lambda, int m) {
  Laurent v = v_factor(m - lambda.length());
  for (const auto& [part, mult] : lambda.multiplicities()) v *= v_factor(mult);
  return v;
}

SymSeries symmetrize(const Partition& lambda, int m) {
  Exps base(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < lambda.length(); ++i) base[static_cast<std::size_t>(i)] = lambda.part(i + 1);
  MPoly f{{base, Laurent(1)}};
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      MPoly lin;
      madd(lin, unit(m, i), Laurent(1));
      madd(lin, unit(m, j), -Laurent::t());
      f = mmul(f, lin, -1);
    }
  }
  // Coefficients of the antisymmetrization on strictly decreasing exponents.
  std::map<Exps, Laurent> alt;
  for (const auto& [e, c] : f) {
    Exps s = e;
    std::sort(s.begin(), s.end(), std::greater<>());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) continue;
    Laurent signed_c = inversions(e) % 2 == 0 ? c : -c;
    auto [it, inserted] = alt.emplace(s, signed_c);
    if (!inserted) it->second += signed_c;
  }
  MPoly num;
  std::vector<int> perm(static_cast<std::size_t>(m));
  for (const auto& [gamma, c] : alt) {
    if (c.is_zero()) continue;
    std::iota(perm.begin(), perm.end(), 0);
    do {
      Exps e(static_cast<std::size_t>(m));
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = gamma[static_cast<std::size_t>(perm[k])];
      madd(num, e, inversions(e) % 2 == 0 ? c : -c);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) num = divide_by_difference(std::move(num), i, j);
  }
  const Laurent v = v_lambda(lambda, m);
  SymSeries s(m, lambda.size());
  for (const auto& [e, c] : num) {
    if (std::is_sorted(e.begin(), e.end(), std::greater<>())) s.add_term(Partition(e), c.divided_exact(v));
  }
  return s;
}

Laurent psi(const Partition& lambda, const Partition& mu) {
  const Partition ld = lambda.dual();
  const Partition md = mu.dual();
  Laurent r(1);
  for (int j = 1; j <= lambda.part(1); ++j) {
    const int th = ld.part(j) - md.part(j);
    const int th_next = ld.part(j + 1) - md.part(j + 1);
    if (th == 0 && th_next == 1) r *= Laurent(1) - Laurent::t(mu.multiplicity(j));
  }
  return r;
}

MPoly branch(const Partition& lambda, int n, std::map<std::pair<Partition, int>, MPoly>& memo) {
  if (lambda.length() > n) return {};
  if (n == 0) return MPoly{{Exps{}, Laurent(1)}};
  auto key = std::make_pair(lambda, n);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  MPoly out;
  for (const Partition& mu : horizontal_strip_removals(lambda)) {
    if (mu.length() > n - 1) continue;
    const Laurent w = psi(lambda, mu);
    const int d = lambda.size() - mu.size();
    for (const auto& [e, c] : branch(mu, n - 1, memo)) {
      Exps e2 = e;
      e2.push_back(d);
      madd(out, e2, c * w);
    }
  }
  memo.emplace(key, out);
  return out;
}

std::atomic<int> g_sym_cap{6};

struct PCache {
  std::mutex mu;
  std::map<std::tuple<Partition, int, int>, SymSeries> entries;
};

PCache& p_cache() {
  static PCache c;
  return c;
}

SymSeries cached_p(const Partition& lambda, int m, HLRoute route) {
  auto key = std::make_tuple(lambda, m, static_cast<int>(route));
  PCache& cache = p_cache();
  {
    std::lock_guard<std::mutex> lock(cache.mu);
    if (auto it = cache.entries.find(key); it != cache.entries.end()) return it->second;
  }
  SymSeries s = route == HLRoute::kSymmetrize ? symmetrize(lambda, m) : [&] {
    std::map<std::pair<Partition, int>, MPoly> memo;
    return from_mpoly(branch(lambda, m, memo), m, lambda.size());
  }();
  std::lock_guard<std::mutex> lock(cache.mu);
  cache.entries.emplace(key, s);
  return s;
}

}  // namespace

SymSeries multiply(const SymSeries& a, const SymSeries& b, int maxdeg) {
  if (a.vars() != b.vars()) throw InvalidArgument("variable count mismatch");
  const int m = a.vars();
  SymSeries r(m, maxdeg);
  if (a.is_zero() || b.is_zero()) return r;
  struct Mono {
    Exps e;
    int deg;
    const Laurent* c;
  };
  std::vector<Mono> full_a;
  for (const auto& [alpha, c] : a.terms()) {
    for (auto& e : arrangements(alpha, m)) full_a.push_back({e, alpha.size(), &c});
  }
  int top_b = 0;
  for (const auto& kv : b.terms()) top_b = std::max(top_b, kv.first.size());
  for (int d = 0; d <= maxdeg; ++d) {
    for (const Partition& gamma : enumerate_partitions(d)) {
      if (gamma.length() > m) continue;
      Exps g(static_cast<std::size_t>(m), 0);
      for (int i = 0; i < gamma.length(); ++i) g[static_cast<std::size_t>(i)] = gamma.part(i + 1);
      Laurent acc;
      for (const Mono& mono : full_a) {
        if (mono.deg > d || d - mono.deg > top_b) continue;
        Exps rest(g.size());
        bool ok = true;
        for (std::size_t i = 0; i < g.size() && ok; ++i) {
          rest[i] = g[i] - mono.e[i];
          ok = rest[i] >= 0;
        }
        if (!ok) continue;
        auto it = b.terms().find(Partition(rest));
        if (it != b.terms().end()) acc += *mono.c * it->second;
      }
      r.add_term(gamma, acc);
    }
  }
  return r;
}

SymSeries elementary(int r, int m) {
  SymSeries s(m, std::max(r, 0));
  if (r >= 0) s.add_term(Partition(std::vector<int>(static_cast<std::size_t>(r), 1)), Laurent(1));
  return s;
}

SymSeries complete(int r, int m) {
  SymSeries s(m, std::max(r, 0));
  if (r >= 0) {
    for (const Partition& p : enumerate_partitions(r)) s.add_term(p, Laurent(1));
  }
  return s;
}

SymSeries monomial_sym(const Partition& lambda, int m) {
  SymSeries s(m, lambda.size());
  s.add_term(lambda, Laurent(1));
  return s;
}

SymSeries schur(const Partition& lambda, int m) {
  const int deg = lambda.size();
  SymSeries zero(m, deg);
  if (lambda.length() > m) return zero;
  if (lambda.empty()) {
    SymSeries one(m, 0);
    one.add_term(Partition(), Laurent(1));
    return one;
  }
  // s_lambda = det(h_{lambda_i - i + j}) = det(e_{lambda'_i - i + j})
  const bool use_e = lambda.part(1) < lambda.length();
  const Partition shape = use_e ? lambda.dual() : lambda;
  const int k = shape.length();
  auto entry = [&](int i, int j) {
    const int r = shape.part(i + 1) - i + j;
    if (r < 0) return SymSeries(m, deg);
    return use_e ? elementary(r, m) : complete(r, m);
  };
  std::function<SymSeries(int, std::vector<int>&)> det = [&](int row, std::vector<int>& cols) {
    if (row == k) {
      SymSeries one(m, deg);
      one.add_term(Partition(), Laurent(1));
      return one;
    }
    SymSeries acc(m, deg);
    int sign_pos = 0;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const int col = cols[c];
      SymSeries e = entry(row, col);
      if (!e.is_zero()) {
        std::vector<int> rest = cols;
        rest.erase(rest.begin() + static_cast<long>(c));
        SymSeries minor = det(row + 1, rest);
        SymSeries prod = multiply(e, minor, deg);
        if (sign_pos % 2 == 1) prod *= Laurent(-1);
        acc += prod;
      }
      ++sign_pos;
    }
    return acc;
  };
  std::vector<int> cols(static_cast<std::size_t>(k));
  std::iota(cols.begin(), cols.end(), 0);
  return det(0, cols);
}

int symmetrization_cap() { return g_sym_cap.load(); }

void set_symmetrization_cap(int m) {
  if (m < 1 || m > 8) throw InvalidArgument("symmetrization cap must lie in [1, 8]");
  g_sym_cap.store(m);
}

SymSeries hl_polynomial(const Partition& lambda, int m) {
  if (m < 1) throw InvalidArgument("need at least one variable");
  if (m > symmetrization_cap()) {
    throw CapExceeded("m = " + std::to_string(m) + " exceeds the symmetrization cap " +
                      std::to_string(symmetrization_cap()));
  }
  if (lambda.length() > m) return SymSeries(m, lambda.size());
  return cached_p(lambda, m, HLRoute::kSymmetrize);
}

SymSeries hl_polynomial_branching(const Partition& lambda, int m) {
  if (m < 1) throw InvalidArgument("need at least one variable");
  if (lambda.length() > m) return SymSeries(m, lambda.size());
  return cached_p(lambda, m, HLRoute::kBranching);
}

std::map<Partition, Laurent> to_p_basis(const SymSeries& f, HLRoute route) {
  std::map<Partition, Laurent> out;
  SymSeries rest = f;
  while (!rest.is_zero()) {
    // smallest size first; within a size the lexicographically largest
    const auto [alpha, c] = *rest.terms().begin();
    SymSeries p = route == HLRoute::kSymmetrize ? hl_polynomial(alpha, f.vars())
                                                : hl_polynomial_branching(alpha, f.vars());
    if (p.coeff(alpha) != Laurent(1)) throw InternalError("P basis is not unitriangular at " + alpha.to_string());
    p *= c;
    rest -= p;
    if (!rest.coeff(alpha).is_zero()) throw InternalError("P basis conversion did not eliminate " + alpha.to_string());
    out[alpha] += c;
  }
  return out;
}

std::map<Partition, Laurent> pieri_expand(const Partition& mu, int r) {
  std::map<Partition, Laurent> out;
  const Partition md = mu.dual();
  for (const Partition& lambda : vertical_strip_covers(mu, r)) {
    const Partition ld = lambda.dual();
    Laurent c(1);
    for (int j = 1; j <= ld.length(); ++j) {
      const int top = ld.part(j) - ld.part(j + 1);
      const int bot = ld.part(j) - md.part(j);
      c *= t_binomial(static_cast<unsigned>(top), static_cast<unsigned>(bot));
    }
    out.emplace(lambda, c);
  }
  return out;
}

std::map<Partition, Laurent> hall_expansion(const Partition& mu, const Partition& nu) {
  const int size = mu.size() + nu.size();
  const int m = std::max(1, size);
  const HLRoute route = m <= 4 ? HLRoute::kSymmetrize : HLRoute::kBranching;
  auto P = [&](const Partition& p) {
    return route == HLRoute::kSymmetrize ? hl_polynomial(p, m) : hl_polynomial_branching(p, m);
  };
  const SymSeries prod = multiply(P(mu), P(nu), size);
  std::map<Partition, Laurent> out;
  for (const auto& [lambda, f] : to_p_basis(prod, route)) {
    const long shift = mu.n() + nu.n() - lambda.n();
    // f t^shift = g(1/t); substitute t = 1/p
    Laurent g = f.shifted(static_cast<int>(shift)).t_scaled(-1);
    if (g.depends_on_y() || g.min_t_exp() < 0) {
      throw InternalError("Hall coefficient is not a polynomial in p for " + lambda.to_string());
    }
    for (const auto& [k, c] : g.terms()) {
      // g^{(3,1)}_{(2),(2)} = p - 1, so only integrality is required
      if (c.get_den() != 1) {
        throw InternalError("Hall coefficient has a non-integral coefficient for " + lambda.to_string());
      }
    }
    out.emplace(lambda, g);
  }
  return out;
}

Laurent hall_coefficient(const Partition& mu, const Partition& nu, const Partition& lambda) {
  if (mu.size() + nu.size() != lambda.size()) return Laurent();
  auto all = hall_expansion(mu, nu);
  auto it = all.find(lambda);
  return it == all.end() ? Laurent() : it->second;
}

Identity parse_identity(std::string_view name) {
  std::string s(name);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (s == "newhall") return Identity::kNewHall;
  if (s == "kawanaka") return Identity::kKawanaka;
  if (s == "macident") return Identity::kMacident;
  if (s == "machallsum") return Identity::kMacHallSum;
  if (s == "schursum") return Identity::kSchurSum;
  if (s == "newhall-perturbed") return Identity::kNewHallPerturbed;
  throw InvalidArgument("unknown identity '" + std::string(name) + "'");
}

std::string identity_name(Identity id) {
  switch (id) {
    case Identity::kNewHall:
      return "newhall";
    case Identity::kKawanaka:
      return "kawanaka";
    case Identity::kMacident:
      return "macident";
    case Identity::kMacHallSum:
      return "machallsum";
    case Identity::kSchurSum:
      return "schursum";
    case Identity::kNewHallPerturbed:
      return "newhall-perturbed";
  }
  return "?";
}

namespace {

void check_args(int m, int D) {
  if (D < 0) throw InvalidArgument("truncation degree must be nonnegative");
  if (m < 1) throw InvalidArgument("need at least one variable");
  if (m > symmetrization_cap()) {
    throw CapExceeded("m = " + std::to_string(m) + " exceeds the symmetrization cap " +
                      std::to_string(symmetrization_cap()));
  }
}

}  // namespace

SymSeries identity_lhs(Identity id, int m, int D) {
  check_args(m, D);
  SymSeries lhs(m, D);
  Constraint constraint = Constraint::kAll;
  if (id == Identity::kNewHall || id == Identity::kNewHallPerturbed) constraint = Constraint::kEvenPartsEvenMult;
  if (id == Identity::kKawanaka) constraint = Constraint::kOddPartsEvenMult;
  if (id == Identity::kMacHallSum) constraint = Constraint::kAllPartsEven;
  bool perturbed = false;
  for (int d = 0; d <= D; ++d) {
    for (const Partition& lambda : enumerate_partitions(d, constraint)) {
      if (lambda.length() > m) continue;
      const int o = lambda.odd_parts();
      const int size = lambda.size();
      Laurent coef(1);
      switch (id) {
        case Identity::kNewHall:
        case Identity::kNewHallPerturbed: {
          Laurent c = lambda.c_poly();
          if (id == Identity::kNewHallPerturbed && !perturbed && size >= 2) {
            // one sign flipped: (1 - t^k) -> (1 + t^k) in the first factor
            Laurent flipped(1);
            for (const auto& [k, v] : c.terms()) {
              if (k.first > 0) flipped += Laurent::monomial(-v, k.first, k.second);
            }
            c = flipped;
            perturbed = true;
          }
          coef = c.shifted(-(o + size) / 2);
          break;
        }
        case Identity::kKawanaka:
          coef = lambda.c_poly().shifted((o - size) / 2);
          break;
        case Identity::kMacident: {
          coef = Laurent::t(static_cast<int>(lambda.n()));
          for (int j = 1; j <= lambda.length(); ++j) coef *= Laurent(1) + Laurent::monomial(1, 1 - j, 1);
          break;
        }
        case Identity::kMacHallSum:
        case Identity::kSchurSum:
          break;
      }
      SymSeries term = id == Identity::kSchurSum ? schur(lambda, m) : hl_polynomial(lambda, m);
      term *= coef;
      lhs += term;
    }
  }
  return lhs;
}

SymSeries identity_rhs(Identity id, int m, int D) {
  check_args(m, D);
  MPoly p{{Exps(static_cast<std::size_t>(m), 0), Laurent(1)}};
  auto times = [&](const MPoly& f) { p = mmul(p, f, D); };
  const Laurent t = Laurent::t();
  const Laurent inv_t = Laurent::t(-1);
  switch (id) {
    case Identity::kNewHall:
    case Identity::kNewHallPerturbed:
      for (int i = 0; i < m; ++i) {
        times(binomial(inv_t, unit(m, i)));
        times(geometric(Laurent(-1), unit(m, i), D));
      }
      [[fallthrough]];
    case Identity::kKawanaka:
      for (int i = 0; i < m; ++i) {
        for (int j = i; j < m; ++j) {
          times(binomial(Laurent(-1), pair_exps(m, i, j)));
          times(geometric(inv_t, pair_exps(m, i, j), D));
        }
      }
      break;
    case Identity::kMacident:
      for (int i = 0; i < m; ++i) {
        times(binomial(Laurent::y(), unit(m, i)));
        times(geometric(Laurent(1), unit(m, i), D));
      }
      break;
    case Identity::kMacHallSum:
      for (int i = 0; i < m; ++i) {
        times(geometric(Laurent(1), pair_exps(m, i, i), D));
        for (int j = i + 1; j < m; ++j) {
          times(binomial(-t, pair_exps(m, i, j)));
          times(geometric(Laurent(1), pair_exps(m, i, j), D));
        }
      }
      break;
    case Identity::kSchurSum:
      for (int i = 0; i < m; ++i) {
        times(geometric(Laurent(1), unit(m, i), D));
        for (int j = i + 1; j < m; ++j) times(geometric(Laurent(1), pair_exps(m, i, j), D));
      }
      break;
  }
  return from_mpoly(p, m, D);
}

Report verify_identity(Identity id, int m, int D) {
  const SymSeries lhs = identity_lhs(id, m, D);
  const SymSeries rhs = identity_rhs(id, m, D);
  std::map<Partition, int> keys;
  for (const auto& kv : lhs.terms()) keys[kv.first] = 0;
  for (const auto& kv : rhs.terms()) keys[kv.first] = 0;
  Record r{{"identity", identity_name(id)}, {"m", m}, {"D", D}, {"coefficients", keys.size()}};
  bool ok = true;
  for (const auto& kv : keys) {
    const Laurent a = lhs.coeff(kv.first);
    const Laurent b = rhs.coeff(kv.first);
    if (a != b) {
      ok = false;
      r["monomial"] = kv.first.to_string();
      r["lhs"] = a.to_string();
      r["rhs"] = b.to_string();
      break;
    }
  }
  Report rep;
  rep.check(ok, r, identity_name(id) + ": coefficients differ" + (ok ? "" : " at x^" + r["monomial"].get<std::string>()));
  return rep;
}

}  // namespace gtau
