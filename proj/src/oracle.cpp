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

#include "oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <exception>
#include <set>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>

#include "classcount.hpp"
#include "formulas.hpp"
#include "symfunc.hpp"

namespace gtau {

namespace {

constexpr std::uint64_t kMaxCodeSpace = std::uint64_t{1} << 26;
constexpr int kUnvisited = -1;
constexpr int kSingular = -2;

std::string case_name(int n, unsigned q) { return "(" + std::to_string(n) + "," + std::to_string(q) + ")"; }

Integer to_integer(std::uint64_t v) { return Integer(std::to_string(v)); }

std::uint64_t vector_count(int n, unsigned q) {
  std::uint64_t v = 1;
  for (int i = 0; i < n; ++i) v *= q;
  return v;
}

MatrixCodec small_codec(const FieldPtr& fp, int n) {
  MatrixCodec codec(fp, n);
  if (codec.space() > kMaxCodeSpace) {
    throw CapExceeded("matrix space of size " + std::to_string(codec.space()) + " is too large for orbit tables");
  }
  return codec;
}

// Transvections I + c E_ij with c over an additive basis of F_q, plus
// diag(w, 1, ..., 1) for GL.
std::vector<Matrix> generators(GroupKind kind, int n, const FieldPtr& fp) {
  const Field& f = *fp;
  std::vector<Elem> basis;
  Elem c = 1;
  for (unsigned i = 0; i < f.k(); ++i) {
    basis.push_back(c);
    c = f.mul(c, f.primitive());
  }
  std::vector<Matrix> gens;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (Elem b : basis) {
        Matrix t = Matrix::identity(fp, n);
        t.at(i, j) = b;
        gens.push_back(std::move(t));
      }
    }
  }
  if (kind == GroupKind::kGL && f.q() > 2) {
    Matrix d = Matrix::identity(fp, n);
    d.at(0, 0) = f.primitive();
    gens.push_back(std::move(d));
  }
  return gens;
}

// Orbit labels over the full code space; singular codes are kSingular.
struct OrbitTable {
  std::vector<int> id;
  std::vector<std::uint64_t> rep;
  std::vector<std::uint64_t> size;
};

std::vector<int> invertible_table(const MatrixCodec& codec, int n, unsigned q) {
  std::vector<int> id(codec.space(), kSingular);
  for_each_element(GroupKind::kGL, n, q, [&](const Matrix& g) { id[codec.encode(g)] = kUnvisited; });
  return id;
}

template <typename Step>
OrbitTable close_orbits(std::vector<int> id, const Step& step) {
  OrbitTable t;
  t.id = std::move(id);
  std::deque<std::uint64_t> queue;
  std::vector<std::uint64_t> next;
  for (std::uint64_t start = 0; start < t.id.size(); ++start) {
    if (t.id[start] != kUnvisited) continue;
    const int label = static_cast<int>(t.rep.size());
    t.rep.push_back(start);
    std::uint64_t count = 1;
    t.id[start] = label;
    queue.push_back(start);
    while (!queue.empty()) {
      const std::uint64_t cur = queue.front();
      queue.pop_front();
      next.clear();
      step(cur, next);
      for (std::uint64_t nb : next) {
        if (t.id[nb] == kSingular) throw InternalError("orbit step left the group");
        if (t.id[nb] != kUnvisited) continue;
        t.id[nb] = label;
        ++count;
        queue.push_back(nb);
      }
    }
    t.size.push_back(count);
  }
  return t;
}

OrbitTable congruence_table(GroupKind kind, int n, unsigned q, const MatrixCodec& codec) {
  const FieldPtr fp = Field::get(q);
  std::vector<Matrix> gens = generators(kind, n, fp);
  std::vector<Matrix> gens_t;
  for (const auto& a : gens) gens_t.push_back(a.transpose());
  return close_orbits(invertible_table(codec, n, q), [&](std::uint64_t code, std::vector<std::uint64_t>& out) {
    const Matrix g = codec.decode(code);
    for (std::size_t i = 0; i < gens.size(); ++i) out.push_back(codec.encode(gens[i] * g * gens_t[i]));
  });
}

Integer alg_multiplicity(const Matrix& h, Elem e) {
  const Matrix shifted = h - Matrix::identity(h.field_ptr(), h.n()).scaled(e);
  Matrix p = shifted;
  for (int i = 1; i < h.n(); ++i) p = p * shifted;
  return p.nullity();
}

}  // namespace

Histogram brute_histogram(int n, unsigned q) {
  require_enumerable(GroupKind::kGL, n, q);
  const FieldPtr fp = Field::get(q);
  const MatrixCodec codec(fp, n);
  const std::uint64_t rows = vector_count(n, q);
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned tasks = static_cast<unsigned>(std::min<std::uint64_t>(std::min(hw, 16u), rows));
  std::vector<std::unordered_map<std::uint64_t, std::uint64_t>> buckets(tasks);
  std::vector<std::exception_ptr> errors(tasks);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < tasks; ++t) {
    const IndexRange range{rows * t / tasks, rows * (t + 1) / tasks};
    pool.emplace_back([&, t, range] {
      try {
        for_each_element(
            GroupKind::kGL, n, q, [&](const Matrix& g) { ++buckets[t][codec.encode(g * g.tau())]; }, range);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::unordered_map<std::uint64_t, std::uint64_t> merged;
  for (const auto& b : buckets) {
    for (const auto& [code, c] : b) merged[code] += c;
  }
  Histogram h;
  h.n = n;
  h.q = q;
  h.total = 0;
  for (const auto& [code, c] : merged) {
    const ClassData cls = classify_rcf(codec.decode(code));
    h.counts[cls] += to_integer(c);
    h.per_element[cls].insert(to_integer(c));
    h.total += to_integer(c);
  }
  return h;
}

Report histogram_report(const Histogram& h) {
  Report rep;
  const Integer order = gl_order(h.n, Integer(h.q));
  rep.check(h.total == order, Record{{"check", "total"}, {"n", h.n}, {"q", h.q}, {"total", h.total.get_str()}},
            "histogram total differs from |GL| at " + case_name(h.n, h.q));
  for (const auto& [c, count] : h.counts) {
    if (!c.is_real()) {
      rep.check(false, Record{{"check", "support"}, {"class", c.to_string()}, {"brute", count.get_str()}},
                "non-real class " + c.to_string() + " in the support");
    }
  }
  for (const ClassData& c : enumerate_class_data(h.n, h.q, ClassPredicate::kReal)) {
    auto it = h.counts.find(c);
    const Integer brute = it == h.counts.end() ? Integer(0) : it->second;
    const Integer formula = require_integer(prob_ggtau(c) * Rational(order), "class total");
    const Integer per_h = count_solutions(c);
    std::string seen_per_h;
    bool per_h_ok = true;
    if (auto pe = h.per_element.find(c); pe != h.per_element.end()) {
      for (const Integer& v : pe->second) {
        seen_per_h += (seen_per_h.empty() ? "" : " ") + v.get_str();
        per_h_ok = per_h_ok && v == per_h;
      }
    }
    rep.check(brute == formula && per_h_ok,
              Record{{"check", "class"},
                     {"n", h.n},
                     {"q", h.q},
                     {"class", c.to_string()},
                     {"brute", brute.get_str()},
                     {"formula", formula.get_str()},
                     {"probability", to_fraction_string(fraction(brute, order))},
                     {"solutions_per_element", seen_per_h},
                     {"count_solutions", per_h.get_str()}},
              "brute count differs from the formula for " + c.to_string());
  }
  return rep;
}

Integer brute_identity_count(int n, unsigned q) {
  std::uint64_t count = 0;
  for_each_element(GroupKind::kGL, n, q, [&](const Matrix& g) {
    if (g == g.transpose()) ++count;
  });
  return to_integer(count);
}

Report gow_macdonald_report(int n, unsigned q) {
  const Integer brute = brute_identity_count(n, q);
  const Integer product = gow_macdonald_count(n, Integer(q));
  Report rep;
  rep.check(brute == product,
            Record{{"n", n}, {"q", q}, {"brute", brute.get_str()}, {"product", product.get_str()}},
            "identity solution count differs from the product at " + case_name(n, q));
  return rep;
}

OrbitReport brute_congruence_orbits(GroupKind kind, int n, unsigned q) {
  if (kind == GroupKind::kSp) throw InvalidArgument("congruence orbits are defined for GL and SL");
  require_enumerable(GroupKind::kGL, n, q);
  const FieldPtr fp = Field::get(q);
  const MatrixCodec codec = small_codec(fp, n);
  const OrbitTable t = congruence_table(kind, n, q, codec);
  OrbitReport r;
  r.kind = kind;
  r.n = n;
  r.q = q;
  r.group_order = group_order(kind, n, q);
  for (std::size_t i = 0; i < t.rep.size(); ++i) {
    const Integer size = to_integer(t.size[i]);
    r.orbits.push_back({codec.decode(t.rep[i]), size, r.group_order / size});
  }
  return r;
}

Integer brute_stabilizer(const Matrix& g, std::vector<Matrix>* elements) {
  if (!g.invertible()) throw InvalidArgument("brute_stabilizer needs an invertible matrix");
  std::uint64_t count = 0;
  for_each_element(GroupKind::kGL, g.n(), g.field().q(), [&](const Matrix& a) {
    if (a * g * a.transpose() == g) {
      ++count;
      if (elements) elements->push_back(a);
    }
  });
  return to_integer(count);
}

Report orbit_report(const OrbitReport& r) {
  Report rep;
  const std::string kind = group_kind_name(r.kind);
  Integer total = 0;
  const bool recheck = gl_order(r.n, Integer(r.q)) <= 25000;
  for (const Orbit& o : r.orbits) {
    total += o.size;
    Record rec{{"kind", kind},
               {"n", r.n},
               {"q", r.q},
               {"representative", o.representative.to_string()},
               {"size", o.size.get_str()},
               {"stabilizer", o.stabilizer.get_str()}};
    bool ok = o.size * o.stabilizer == r.group_order;
    if (recheck) {
      std::vector<Matrix> elems;
      brute_stabilizer(o.representative, &elems);
      std::uint64_t in_group = 0;
      for (const auto& a : elems) {
        if (r.kind == GroupKind::kGL || a.det() == 1) ++in_group;
      }
      rec["brute_stabilizer"] = to_integer(in_group).get_str();
      ok = ok && to_integer(in_group) == o.stabilizer;
    }
    rep.check(ok, rec, "orbit-stabilizer fails for " + o.representative.to_string());
  }
  const Integer gl = gl_order(r.n, Integer(r.q));
  rep.check(total == gl, Record{{"kind", kind}, {"n", r.n}, {"q", r.q}, {"orbits", r.orbits.size()}, {"covered", total.get_str()}},
            "orbits do not cover GL" + case_name(r.n, r.q));
  if (r.kind == GroupKind::kGL) {
    const Integer k = coset_class_count(r.n, r.q);
    rep.check(k == static_cast<long>(r.orbits.size()),
              Record{{"check", "orbit count"}, {"n", r.n}, {"q", r.q}, {"brute", r.orbits.size()}, {"formula", k.get_str()}},
              "congruence orbit count differs from coset_class_count at " + case_name(r.n, r.q));
  }
  return rep;
}

Report min_stabilizer_report(int n, unsigned q) {
  const OrbitReport r = brute_congruence_orbits(GroupKind::kGL, n, q);
  Integer smallest = r.group_order;
  for (const Orbit& o : r.orbits) smallest = std::min(smallest, o.stabilizer);
  const Interval bound = min_centralizer_bound(n, q);
  Report rep;
  rep.check(Rational(smallest) >= bound.hi,
            Record{{"n", n}, {"q", q}, {"min_stabilizer", smallest.get_str()}, {"bound", bound.to_string()},
                   {"bound_approx", bound.hi_double()}},
            "min |O_g| is below the centralizer bound at " + case_name(n, q));
  return rep;
}

Report sl_orbit_report(int n, unsigned q) {
  require_enumerable(GroupKind::kGL, n, q);
  const FieldPtr fp = Field::get(q);
  const Field& f = *fp;
  const MatrixCodec codec = small_codec(fp, n);
  const OrbitTable gl = congruence_table(GroupKind::kGL, n, q, codec);
  const OrbitTable sl = congruence_table(GroupKind::kSL, n, q, codec);

  std::vector<bool> has_minus(gl.rep.size());
  for (std::size_t i = 0; i < gl.rep.size(); ++i) {
    std::vector<Matrix> elems;
    brute_stabilizer(codec.decode(gl.rep[i]), &elems);
    has_minus[i] = std::any_of(elems.begin(), elems.end(), [&](const Matrix& a) { return a.det() == f.minus_one(); });
  }
  // (GL orbit, det) -> SL orbits
  std::map<std::pair<int, Elem>, std::set<int>> pieces;
  for (std::uint64_t code = 0; code < gl.id.size(); ++code) {
    if (gl.id[code] < 0) continue;
    pieces[{gl.id[code], codec.decode(code).det()}].insert(sl.id[code]);
  }
  Report rep;
  std::map<Elem, std::pair<int, int>> slices;  // det -> (GL orbits met, SL orbits)
  for (const auto& [key, sl_ids] : pieces) {
    const int predicted = has_minus[static_cast<std::size_t>(key.first)] ? 1 : 2;
    const int found = static_cast<int>(sl_ids.size());
    slices[key.second].first += 1;
    slices[key.second].second += found;
    bool ok = found == predicted;
    if (n % 2 == 1) ok = ok && found == 1;
    rep.check(ok,
              Record{{"check", "split"},
                     {"n", n},
                     {"q", q},
                     {"representative", codec.decode(gl.rep[static_cast<std::size_t>(key.first)]).to_string()},
                     {"det", static_cast<int>(key.second)},
                     {"stabilizer_has_det_minus_one", has_minus[static_cast<std::size_t>(key.first)]},
                     {"sl_orbits", found},
                     {"predicted", predicted}},
              "SL splitting differs from the stabilizer prediction at " + case_name(n, q));
  }
  for (const auto& [det, counts] : slices) {
    const auto [gl_met, sl_count] = counts;
    const bool ok = n % 2 == 1 ? sl_count == gl_met : sl_count < 2 * gl_met;
    rep.check(ok,
              Record{{"check", "slice"}, {"n", n}, {"q", q}, {"det", static_cast<int>(det)}, {"gl_orbits", gl_met},
                     {"sl_orbits", sl_count}},
              n % 2 == 1 ? "an SL orbit splits for odd n at " + case_name(n, q)
                         : "SL orbits reach twice the GL count on a slice at " + case_name(n, q));
  }
  rep.add(Record{{"check", "totals"},
                 {"n", n},
                 {"q", q},
                 {"gl_orbits", gl.rep.size()},
                 {"sl_orbits", sl.rep.size()},
                 {"k_coset", coset_class_count(n, q).get_str()}});
  return rep;
}

Integer brute_total_class_count(int n, unsigned q) {
  require_enumerable(GroupKind::kGL, n, q);
  const FieldPtr fp = Field::get(q);
  const MatrixCodec codec = small_codec(fp, n);
  const std::vector<Matrix> gens = generators(GroupKind::kGL, n, fp);
  std::vector<Matrix> gens_inv;
  std::vector<Matrix> gens_t;
  for (const auto& a : gens) {
    gens_inv.push_back(a.inverse());
    gens_t.push_back(a.transpose());
  }
  const std::vector<int> base = invertible_table(codec, n, q);
  const std::uint64_t space = codec.space();
  // state = code (eps = 0, the element g) or space + code (eps = 1, g tau)
  std::vector<int> id(2 * space);
  std::copy(base.begin(), base.end(), id.begin());
  std::copy(base.begin(), base.end(), id.begin() + static_cast<std::ptrdiff_t>(space));
  const OrbitTable t = close_orbits(std::move(id), [&](std::uint64_t state, std::vector<std::uint64_t>& out) {
    const bool coset = state >= space;
    const Matrix g = codec.decode(coset ? state - space : state);
    const std::uint64_t off = coset ? space : 0;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const Matrix x = coset ? gens[i] * g * gens_t[i] : gens[i] * g * gens_inv[i];
      out.push_back(off + codec.encode(x));
    }
    out.push_back(off + codec.encode(g.tau()));
  });
  return to_integer(t.rep.size());
}

Report total_class_report(int n, unsigned q) {
  const Integer brute = brute_total_class_count(n, q);
  const Integer formula = total_class_count(n, q);
  Report rep;
  rep.check(brute == formula,
            Record{{"n", n},
                   {"q", q},
                   {"extension_order", Integer(2 * gl_order(n, Integer(q))).get_str()},
                   {"brute", brute.get_str()},
                   {"formula", formula.get_str()}},
            "class count of the extension differs at " + case_name(n, q));
  return rep;
}

SpStats brute_sp_stats(int n, unsigned q) {
  SpStats s;
  s.n = n;
  s.q = q;
  s.order = 0;
  s.regular_semisimple = 0;
  std::map<ClassData, std::uint64_t> counts;
  for_each_element(GroupKind::kSp, n, q, [&](const Matrix& a) { ++counts[classify_rcf(a)]; });
  for (const auto& [c, k] : counts) {
    s.counts[c] = to_integer(k);
    s.order += to_integer(k);
    if (c.is_regular_semisimple()) s.regular_semisimple += to_integer(k);
  }
  return s;
}

Report sp_stats_report(const SpStats& s) {
  Report rep;
  const Integer order = sp_order(s.n, Integer(s.q));
  rep.check(s.order == order, Record{{"check", "total"}, {"n", s.n}, {"q", s.q}, {"total", s.order.get_str()}},
            "enumerated Sp order differs at " + case_name(s.n, s.q));
  for (const ClassData& c : enumerate_class_data(s.n, s.q, ClassPredicate::kAll)) {
    auto it = s.counts.find(c);
    const Rational brute = fraction(it == s.counts.end() ? Integer(0) : it->second, order);
    const Rational formula = prob_sp_class(c);
    if (brute == 0 && formula == 0) continue;
    rep.check(brute == formula,
              Record{{"check", "class"},
                     {"n", s.n},
                     {"q", s.q},
                     {"class", c.to_string()},
                     {"brute", to_fraction_string(brute)},
                     {"formula", to_fraction_string(formula)}},
              "Sp class proportion differs from the formula for " + c.to_string());
  }
  const FieldPtr fp = Field::get(s.q);
  const Poly unip = Poly::linear(fp, 1);
  for (const Partition& mu : enumerate_partitions(s.n)) {
    auto it = s.counts.find(ClassData(s.q, {{unip, mu}}));
    const Rational brute = fraction(it == s.counts.end() ? Integer(0) : it->second, order);
    const Rational formula = prob_unipotent(mu, Rational(s.q), UnipotentTarget::kSp);
    rep.check(brute == formula,
              Record{{"check", "unipotent"},
                     {"n", s.n},
                     {"q", s.q},
                     {"type", mu.to_string()},
                     {"brute", to_fraction_string(brute)},
                     {"formula", to_fraction_string(formula)}},
              "unipotent proportion differs for type " + mu.to_string());
  }
  rep.add(Record{{"check", "regular semisimple"},
                 {"n", s.n},
                 {"q", s.q},
                 {"proportion", to_fraction_string(fraction(s.regular_semisimple, order))}});
  return rep;
}

Report regss_report(int n, unsigned q) {
  if (n < 2) throw InvalidArgument("regss_report needs n >= 2");
  const Histogram h = brute_histogram(n, q);
  Integer rs = 0;
  for (const auto& [c, k] : h.counts) {
    if (c.is_regular_semisimple()) rs += k;
  }
  const Rational gl_mass = fraction(rs, h.total);
  const SpStats s = brute_sp_stats(2 * (n / 2), q);
  const Rational sp_prop = fraction(s.regular_semisimple, s.order);
  Report rep;
  rep.check(gl_mass == sp_prop,
            Record{{"n", n},
                   {"q", q},
                   {"sp_n", s.n},
                   {"gl_mass", to_fraction_string(gl_mass)},
                   {"sp_proportion", to_fraction_string(sp_prop)}},
            "regular semisimple masses differ at " + case_name(n, q));
  return rep;
}

Report verify_orbit_structure(int n, unsigned q) {
  require_enumerable(GroupKind::kGL, n, q);
  const FieldPtr fp = Field::get(q);
  const Field& f = *fp;
  const MatrixCodec codec = small_codec(fp, n);
  const OrbitTable orbits = congruence_table(GroupKind::kGL, n, q, codec);
  const Integer order = gl_order(n, Integer(q));
  const int mu2 = f.even_characteristic() ? 1 : 2;

  std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> solutions;
  for_each_element(GroupKind::kGL, n, q, [&](const Matrix& g) { solutions[codec.encode(g * g.tau())].push_back(codec.encode(g)); });

  auto qualifies = [&](const Matrix& h) {
    const Integer plus = alg_multiplicity(h, 1);
    const Integer minus = f.even_characteristic() ? plus : alg_multiplicity(h, f.minus_one());
    if (n % 2 == 0) return plus == 0 && minus == 0;
    return plus == 1 && (f.even_characteristic() || minus == 0);
  };

  Report rep;
  std::set<ClassData> seen;
  std::vector<std::uint64_t> keys;
  for (auto& kv : solutions) {
    keys.push_back(kv.first);
    std::sort(kv.second.begin(), kv.second.end());
  }
  std::sort(keys.begin(), keys.end());
  std::uint64_t checked = 0;
  for (std::uint64_t hcode : keys) {
    const Matrix h = codec.decode(hcode);
    if (!qualifies(h)) continue;
    ++checked;
    const auto& sols = solutions[hcode];
    const std::uint64_t g0 = sols.front();
    const ClassData c = classify_rcf(h);
    const Integer cent = centralizer_size(c);
    const Integer stab = order / to_integer(orbits.size[static_cast<std::size_t>(orbits.id[g0])]);
    const Integer factor = n % 2 == 1 ? Integer(mu2) : Integer(1);
    const Integer expected = cent * factor / stab;
    bool ok = (cent * factor) % stab == 0 && expected == to_integer(sols.size());
    // For odd n the solutions diag(g0, c) fall into one congruence orbit
    // per square class of c, so only g ~ g' ~ g^{-1} is asserted there.
    bool one_orbit = true;
    bool congruent = true;
    for (std::uint64_t x : sols) {
      const Matrix g = codec.decode(x);
      const int o = orbits.id[x];
      one_orbit = one_orbit && orbits.id[g0] == o;
      congruent = congruent && orbits.id[codec.encode(g.transpose())] == o && orbits.id[codec.encode(g.inverse())] == o;
    }
    ok = ok && congruent && (n % 2 == 1 || one_orbit);
    Record rec{{"n", n},
               {"q", q},
               {"class", c.to_string()},
               {"solutions", sols.size()},
               {"centralizer", cent.get_str()},
               {"stabilizer", stab.get_str()},
               {"mu2", n % 2 == 1 ? mu2 : 1},
               {"one_congruence_orbit", one_orbit},
               {"congruent", congruent}};
    if (seen.insert(c).second) {
      // C_G(h) acting by x -> c x c' on the solutions
      std::vector<Matrix> cent_elems;
      for_each_element(GroupKind::kGL, n, q, [&](const Matrix& a) {
        if (a * h == h * a) cent_elems.push_back(a);
      });
      std::set<std::uint64_t> remaining(sols.begin(), sols.end());
      int orbit_count = 0;
      bool closed = true;
      while (!remaining.empty()) {
        const Matrix x = codec.decode(*remaining.begin());
        ++orbit_count;
        for (const auto& a : cent_elems) {
          const std::uint64_t y = codec.encode(a * x * a.transpose());
          if (!std::binary_search(sols.begin(), sols.end(), y)) closed = false;
          remaining.erase(y);
        }
      }
      const int expected_orbits = n % 2 == 1 ? mu2 : 1;
      rec["centralizer_brute"] = cent_elems.size();
      rec["centralizer_orbits"] = orbit_count;
      ok = ok && closed && to_integer(cent_elems.size()) == cent && orbit_count == expected_orbits;
    }
    rep.check(ok, rec, "orbit structure fails for h in class " + c.to_string() + " at " + case_name(n, q));
  }
  rep.add(Record{{"n", n}, {"q", q}, {"qualifying_h", checked}});
  if (checked == 0) rep.fail("no qualifying h at " + case_name(n, q));
  return rep;
}

namespace {

// The abelian p-group Z/p^{l_1} x ... x Z/p^{l_r}, elements in mixed radix.
class AbelianGroup {
 public:
  AbelianGroup(const Partition& lambda, unsigned p) : p_(p) {
    for (int part : lambda.parts()) {
      unsigned m = 1;
      for (int i = 0; i < part; ++i) m *= p;
      mod_.push_back(m);
    }
    order_ = 1;
    for (unsigned m : mod_) order_ *= m;
    digits_.resize(order_);
    for (unsigned x = 0; x < order_; ++x) {
      unsigned v = x;
      for (unsigned m : mod_) {
        digits_[x].push_back(v % m);
        v /= m;
      }
    }
  }

  unsigned order() const { return order_; }

  unsigned add(unsigned a, unsigned b) const {
    unsigned code = 0;
    unsigned scale = 1;
    for (std::size_t i = 0; i < mod_.size(); ++i) {
      code += ((digits_[a][i] + digits_[b][i]) % mod_[i]) * scale;
      scale *= mod_[i];
    }
    return code;
  }

  unsigned times(unsigned a, unsigned k) const {
    unsigned code = 0;
    unsigned scale = 1;
    for (std::size_t i = 0; i < mod_.size(); ++i) {
      code += static_cast<unsigned>((static_cast<unsigned long>(digits_[a][i]) * k) % mod_[i]) * scale;
      scale *= mod_[i];
    }
    return code;
  }

  unsigned p() const { return p_; }

 private:
  unsigned p_;
  std::vector<unsigned> mod_;
  unsigned order_;
  std::vector<std::vector<unsigned>> digits_;
};

int log_p(std::uint64_t v, unsigned p) {
  int e = 0;
  while (v > 1) {
    if (v % p != 0) throw InternalError("subgroup order is not a power of p");
    v /= p;
    ++e;
  }
  return e;
}

Partition from_dual_sums(const std::vector<int>& sums) {
  std::vector<int> dual;
  int prev = 0;
  for (int s : sums) {
    if (s == prev) break;
    dual.push_back(s - prev);
    prev = s;
  }
  return Partition(dual).dual();
}

// (type of H, type of G/H) for every subgroup H.
std::map<std::pair<Partition, Partition>, Integer> subgroup_types(const Partition& lambda, unsigned p) {
  const AbelianGroup G(lambda, p);
  const unsigned N = G.order();
  const int top = lambda.part(1);
  std::vector<unsigned> pk(static_cast<std::size_t>(top) + 1, 1);
  for (int k = 1; k <= top; ++k) pk[static_cast<std::size_t>(k)] = pk[static_cast<std::size_t>(k - 1)] * p;

  std::set<std::vector<bool>> found;
  std::deque<std::vector<bool>> queue;
  std::vector<bool> trivial(N, false);
  trivial[0] = true;
  found.insert(trivial);
  queue.push_back(trivial);
  while (!queue.empty()) {
    const std::vector<bool> H = queue.front();
    queue.pop_front();
    std::vector<unsigned> elems;
    for (unsigned x = 0; x < N; ++x) {
      if (H[x]) elems.push_back(x);
    }
    std::vector<bool> done = H;
    for (unsigned x = 0; x < N; ++x) {
      if (done[x]) continue;
      for (unsigned h : elems) done[G.add(x, h)] = true;
      std::vector<bool> K(N, false);
      unsigned mult = 0;
      do {
        for (unsigned h : elems) K[G.add(mult, h)] = true;
        mult = G.add(mult, x);
      } while (mult != 0);
      if (found.insert(K).second) queue.push_back(std::move(K));
    }
  }

  std::map<std::pair<Partition, Partition>, Integer> out;
  for (const auto& H : found) {
    std::vector<int> sub_sums;
    std::vector<int> quo_sums;
    std::uint64_t size = 0;
    for (unsigned x = 0; x < N; ++x) size += H[x] ? 1 : 0;
    for (int k = 1; k <= top; ++k) {
      std::uint64_t torsion = 0;
      std::uint64_t into = 0;
      for (unsigned x = 0; x < N; ++x) {
        const unsigned y = G.times(x, pk[static_cast<std::size_t>(k)]);
        if (H[x] && y == 0) ++torsion;
        if (H[y]) ++into;
      }
      sub_sums.push_back(log_p(torsion, p));
      quo_sums.push_back(log_p(into / size, p));
    }
    ++out[{from_dual_sums(sub_sums), from_dual_sums(quo_sums)}];
  }
  return out;
}

}  // namespace

Integer brute_hall_count(const Partition& mu, const Partition& nu, const Partition& lambda, unsigned p) {
  if (mu.size() + nu.size() != lambda.size()) return 0;
  if (lambda.empty()) return 1;
  const auto types = subgroup_types(lambda, p);
  auto it = types.find({mu, nu});
  return it == types.end() ? Integer(0) : it->second;
}

Report hall_brute_report(int max_size, const std::vector<unsigned>& primes) {
  Report rep;
  std::map<std::pair<Partition, Partition>, std::map<Partition, Laurent>> expansions;
  for (int s = 1; s <= max_size; ++s) {
    for (const Partition& lambda : enumerate_partitions(s)) {
      for (unsigned p : primes) {
        const auto types = subgroup_types(lambda, p);
        for (int a = 0; a <= s; ++a) {
          for (const Partition& mu : enumerate_partitions(a)) {
            for (const Partition& nu : enumerate_partitions(s - a)) {
              auto key = std::make_pair(mu, nu);
              auto ex = expansions.find(key);
              if (ex == expansions.end()) ex = expansions.emplace(key, hall_expansion(mu, nu)).first;
              auto poly = ex->second.find(lambda);
              const Rational formula = poly == ex->second.end() ? Rational(0) : poly->second.eval(Rational(p));
              auto it = types.find(key);
              const Integer brute = it == types.end() ? Integer(0) : it->second;
              if (brute == 0 && formula == 0) continue;
              rep.check(formula == brute,
                        Record{{"p", p},
                               {"lambda", lambda.to_string()},
                               {"mu", mu.to_string()},
                               {"nu", nu.to_string()},
                               {"brute", brute.get_str()},
                               {"formula", to_fraction_string(formula)}},
                        "Hall polynomial differs from subgroup count at lambda=" + lambda.to_string() +
                            ", mu=" + mu.to_string() + ", nu=" + nu.to_string());
            }
          }
        }
      }
    }
  }
  return rep;
}

}  // namespace gtau
