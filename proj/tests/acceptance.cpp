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

// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "classcount.hpp"
#include "classdata.hpp"
#include "exact.hpp"
#include "formulas.hpp"
#include "matrix.hpp"
#include "measures.hpp"
#include "oracle.hpp"
#include "qseries.hpp"
#include "report.hpp"
#include "symfunc.hpp"

using namespace gtau;

namespace {

using Case = std::pair<int, unsigned>;

// Accumulates sub-reports; remembers the first failure.
struct Outcome {
  bool ok = true;
  std::string detail;
  void take(const Report& r) {
    if (ok && !r.passed()) {
      ok = false;
      detail = r.failure();
    }
  }
  void require(bool cond, const std::string& what) {
    if (ok && !cond) {
      ok = false;
      detail = what;
    }
  }
};

std::string name(const Case& c) { return "(" + std::to_string(c.first) + "," + std::to_string(c.second) + ")"; }

Outcome identity_counts() {
  Outcome out;
  for (const Case& c : std::vector<Case>{{1, 2}, {1, 3}, {2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {4, 2}})
    out.take(gow_macdonald_report(c.first, c.second));
  out.require(brute_identity_count(2, 2) == 4 && brute_identity_count(2, 3) == 18 && brute_identity_count(3, 2) == 28,
              "worked identity counts");
  return out;
}

Outcome histograms() {
  Outcome out;
  for (const Case& c : std::vector<Case>{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}})
    out.take(histogram_report(brute_histogram(c.first, c.second)));
  return out;
}

Outcome identities() {
  Outcome out;
  for (Identity id : {Identity::kNewHall, Identity::kKawanaka, Identity::kMacident, Identity::kMacHallSum,
                      Identity::kSchurSum})
    out.take(verify_identity(id, 4, 8));
  out.take(hall_brute_report(6, {2, 3}));
  return out;
}

Outcome qseries() {
  Outcome out;
  for (QSum k : {QSum::kEuler, QSum::kQs1, QSum::kQs2, QSum::kQs3}) out.take(verify_qsum(k, 12));
  return out;
}

Outcome congruence_orbits() {
  Outcome out;
  for (const Case& c : std::vector<Case>{{1, 2}, {2, 2}, {3, 2}, {1, 3}, {2, 3}, {3, 3}}) {
    const OrbitReport r = brute_congruence_orbits(GroupKind::kGL, c.first, c.second);
    out.take(orbit_report(r));
    out.require(Integer(static_cast<unsigned long>(r.orbits.size())) == coset_class_count(c.first, c.second),
                "orbit count at " + name(c));
  }
  return out;
}

Outcome class_bounds() {
  Outcome out;
  out.take(bound_report(40, {2, 3, 4, 5, 7, 8, 9}));
  return out;
}

Outcome symplectic() {
  Outcome out;
  for (const Case& c : std::vector<Case>{{2, 2}, {2, 3}, {2, 5}, {4, 2}}) out.take(sp_stats_report(brute_sp_stats(c.first, c.second)));
  return out;
}

Outcome regular_semisimple() {
  Outcome out;
  for (const Case& c : std::vector<Case>{{2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 2}}) out.take(regss_report(c.first, c.second));
  return out;
}

Outcome normalization() {
  Outcome out;
  for (unsigned q : {2u, 3u}) {
    for (int n = 1; n <= 5; ++n) {
      Rational total = 0;
      for_each_class_data(n, q, ClassPredicate::kAll, [&](const ClassData& c) { total += prob_ggtau(c); });
      out.require(total == 1, "gg^tau probabilities at " + name({n, q}) + " sum to " + to_fraction_string(total));
    }
    for (int n : {2, 4}) {
      Rational total = 0;
      for_each_class_data(n, q, ClassPredicate::kAll, [&](const ClassData& c) { total += prob_sp_class(c); });
      out.require(total == 1, "Sp probabilities at " + name({n, q}) + " sum to " + to_fraction_string(total));
    }
  }
  return out;
}

Outcome stabilizer_bounds() {
  Outcome out;
  // The bound has log_q n in a denominator, so n = 1 is outside its range.
  for (const Case& c : std::vector<Case>{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {4, 2}})
    out.take(min_stabilizer_report(c.first, c.second));
  out.take(verify_centbounduni(10, {2, 3, 4, 5}));
  return out;
}

Outcome orbit_structure() {
  Outcome out;
  for (const Case& c : std::vector<Case>{{2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 2}})
    out.take(verify_orbit_structure(c.first, c.second));
  for (const Case& c : std::vector<Case>{{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
    const Report r = sl_orbit_report(c.first, c.second);
    out.take(r);
    for (const Record& rec : r.records()) {
      if (rec.value("check", "") != "totals") continue;
      const long gl = rec["gl_orbits"].get<long>();
      const long sl = rec["sl_orbits"].get<long>();
      const Integer k(rec["k_coset"].get<std::string>());
      if (c.first % 2 == 1)
        out.require(Integer(sl) == k, "SL orbit total differs from k at " + name(c));
      else
        out.require(sl < 2 * gl, "SL orbits are not below twice the GL orbits at " + name(c));
    }
  }
  return out;
}

Outcome total_classes() {
  Outcome out;
  for (const Case& c : std::vector<Case>{{2, 2}, {2, 3}, {3, 2}}) out.take(total_class_report(c.first, c.second));
  out.require(brute_total_class_count(2, 2) == 6, "k(G+(2,2)) = 6");
  return out;
}

Outcome asymptotics() {
  Outcome out;
  for (unsigned q : {2u, 3u})
    for (Parity p : {Parity::kEven, Parity::kOdd}) out.take(asy_report(q, p, 30, Rational(1, 100)));
  return out;
}

Outcome measures() {
  Outcome out;
  out.take(normalization_check(PartitionMeasure(Family::kSp, 1, 2), 30));
  out.take(normalization_check(PartitionMeasure(Family::kOEven, 1, 2), 30));
  out.take(normalization_check(PartitionMeasure(Family::kOOdd, 1, 3), 30));
  for (unsigned q : {2u, 3u}) out.take(verify_product_identity(q, 8));
  out.take(empirical_limit_compare(10, 2, 100000, 20261015));
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"identity solution counts equal the alternating product", identity_counts},
      {"brute gg^tau histograms equal the class formula", histograms},
      {"symmetric-function identities and Hall polynomials", identities},
      {"q-series identities to n = 12", qseries},
      {"congruence orbit counts equal k(GL tau)", congruence_orbits},
      {"k(GL tau) bounds for n <= 40", class_bounds},
      {"symplectic class and unipotent proportions", symplectic},
      {"regular semisimple masses agree with Sp", regular_semisimple},
      {"class probabilities sum to one", normalization},
      {"stabilizers exceed the centralizer bound", stabilizer_bounds},
      {"solution orbit structure and SL splitting", orbit_structure},
      {"class counts of the extension by tau", total_classes},
      {"k(GL tau) / q^{n/2} approaches its limit", asymptotics},
      {"limiting partition measures", measures},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.ok) ++failures;
    std::printf("%s %2zu %s (%.1fs)%s%s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs,
                o.ok ? "" : ": ", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
