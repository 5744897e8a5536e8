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

// Command-line front end over the C API. Exit status: 0 when every
// embedded assertion passes, 1 on an assertion failure, 2 on a
// configuration error.

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "gtau/gtau.h"

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kConfig = 2;

struct Common {
  std::string format = "json-lines";
  std::string output;
  std::optional<std::uint64_t> cap;
};

// Takes the handle by address: it is only filled in once the call that
// produced st has run.
int finish(gtau_status st, gtau_report** slot, const Common& common) {
  gtau_report* rep = *slot;
  if (st == GTAU_INVALID_ARGUMENT || st == GTAU_CAP_EXCEEDED) {
    std::cerr << "error: " << gtau_last_error() << "\n";
    return kConfig;
  }
  if (st != GTAU_OK) {
    std::cerr << "internal error: " << gtau_last_error() << "\n";
    return kFail;
  }
  const char* body = common.format == "csv" ? gtau_report_csv(rep) : gtau_report_json_lines(rep);
  if (common.output.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(common.output, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << common.output << "\n";
      gtau_report_free(rep);
      return kConfig;
    }
    out << body;
  }
  const bool passed = gtau_report_passed(rep) != 0;
  if (!passed) std::cerr << "FAIL: " << gtau_report_failure(rep) << "\n";
  gtau_report_free(rep);
  return passed ? kPass : kFail;
}

void add_common(CLI::App* app, Common& common) {
  app->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"json-lines", "csv"}))
      ->capture_default_str();
  app->add_option("--output", common.output, "Write the report to this file instead of stdout");
  app->add_option("--cap", common.cap, "Enumeration cap (group order); overrides GTAU_ENUM_CAP");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact statistics of g g^tau in GL(n,q), with brute-force cross-checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(gtau_version()));

  Common common;
  int n = 0;
  unsigned q = 0;
  std::function<int()> run;

  auto* identities = app.add_subcommand("identities", "Symmetric-function and q-series identities");
  identities->require_subcommand(1);
  auto* verify = identities->add_subcommand("verify", "Verify one identity by exact expansion");
  std::string name;
  int vars = 4;
  int deg = 6;
  verify->add_option("--name", name, "newhall, kawanaka, macident, machallsum, schursum, hallishall, euler, qs1-qs3")
      ->required();
  verify->add_option("--vars", vars, "Number of variables")->capture_default_str();
  verify->add_option("--deg", deg, "Truncation degree")->capture_default_str();
  add_common(verify, common);
  verify->callback([&] {
    run = [&] {
      gtau_report* rep = nullptr;
      return finish(gtau_identity_verify(name.c_str(), vars, deg, &rep), &rep, common);
    };
  });

  auto* count = app.add_subcommand("count", "Probability and solution counts of gg^tau per class");
  std::string class_text;
  count->add_option("--n", n)->required();
  count->add_option("--q", q)->required();
  count->add_option("--class", class_text, "Class data, e.g. \"n=2; GF(2):1,1,1:[1]\"");
  add_common(count, common);
  count->callback([&] {
    run = [&] {
      gtau_report* rep = nullptr;
      return finish(gtau_count(n, q, class_text.empty() ? nullptr : class_text.c_str(), &rep), &rep, common);
    };
  });

  auto* histogram = app.add_subcommand("histogram", "Class totals of gg^tau over GL(n,q)");
  bool brute = false;
  histogram->add_option("--n", n)->required();
  histogram->add_option("--q", q)->required();
  histogram->add_flag("--brute", brute, "Enumerate GL(n,q) and compare with the formula");
  add_common(histogram, common);
  histogram->callback([&] {
    run = [&] {
      gtau_report* rep = nullptr;
      return finish(gtau_histogram(n, q, brute ? 1 : 0, &rep), &rep, common);
    };
  });

  auto* classes = app.add_subcommand("classes", "Class counts of GL(n,q) and its extension by tau");
  classes->add_option("--n", n)->required();
  classes->add_option("--q", q)->required();
  auto* classes_modes = classes->add_option_group("mode");
  bool coset = false, gl = false, total = false, bounds = false, asy = false;
  classes_modes->add_flag("--coset", coset, "k(GL tau) (default)");
  classes_modes->add_flag("--gl", gl, "k(GL)");
  classes_modes->add_flag("--total", total, "k(GL extended by tau)");
  classes_modes->add_flag("--bounds", bounds, "28/23 q^{floor(n/2)} bounds for sizes 1..n");
  classes_modes->add_flag("--asy", asy, "k(GL tau)/q^{floor(n/2)} against its limit");
  classes_modes->require_option(0, 1);
  classes->add_flag("--brute", brute, "Cross-check by enumeration");
  add_common(classes, common);
  classes->callback([&] {
    run = [&] {
      gtau_classes_mode mode = GTAU_CLASSES_COSET;
      if (gl) mode = GTAU_CLASSES_GL;
      if (total) mode = GTAU_CLASSES_TOTAL;
      if (bounds) mode = GTAU_CLASSES_BOUNDS;
      if (asy) mode = GTAU_CLASSES_ASY;
      gtau_report* rep = nullptr;
      return finish(gtau_classes(mode, n, q, brute ? 1 : 0, &rep), &rep, common);
    };
  });

  auto* sp = app.add_subcommand("sp", "Symplectic group statistics");
  sp->add_option("--n", n)->required();
  sp->add_option("--q", q)->required();
  auto* sp_modes = sp->add_option_group("mode");
  bool unipotent = false, stats = false;
  sp_modes->add_flag("--unipotent", unipotent, "Unipotent class proportions (default)");
  sp_modes->add_flag("--stats", stats, "Enumerate Sp(n,q) and compare every class");
  sp_modes->require_option(0, 1);
  add_common(sp, common);
  sp->callback([&] {
    run = [&] {
      gtau_report* rep = nullptr;
      return finish(gtau_sp(stats ? GTAU_SP_STATS : GTAU_SP_UNIPOTENT, n, q, &rep), &rep, common);
    };
  });

  auto* measures = app.add_subcommand("measures", "Limiting partition measures");
  std::string family;
  std::string u = "1";
  int measure_cap = 30;
  int mn = 10;
  long trials = 100000;
  std::optional<std::uint64_t> seed;
  auto* measure_modes = measures->add_option_group("mode");
  bool check = false, sample = false, compare = false, identity = false;
  measure_modes->add_flag("--check", check, "Normalization interval (default)");
  measure_modes->add_flag("--sample", sample, "Sample and tabulate against exact masses");
  measure_modes->add_flag("--compare", compare, "Random GL(n,q) against the limiting law");
  measure_modes->add_flag("--identity", identity, "Product identity as a u-series");
  measure_modes->require_option(0, 1);
  measures->add_option("--family", family, "sp, o-even, o-odd");
  measures->add_option("--u", u, "u in (0,1] as a rational")->capture_default_str();
  measures->add_option("--q", q)->required();
  measures->add_option("--trunc", measure_cap, "Size cap (check) or u-degree (identity)")->capture_default_str();
  measures->add_option("--n", mn, "Matrix size for --compare")->capture_default_str();
  measures->add_option("--trials", trials)->capture_default_str();
  measures->add_option("--seed", seed, "Required for --sample and --compare");
  add_common(measures, common);
  measures->callback([&] {
    run = [&] {
      gtau_measures_mode mode = GTAU_MEASURES_CHECK;
      if (sample) mode = GTAU_MEASURES_SAMPLE;
      if (compare) mode = GTAU_MEASURES_COMPARE;
      if (identity) mode = GTAU_MEASURES_IDENTITY;
      if ((mode == GTAU_MEASURES_CHECK || mode == GTAU_MEASURES_SAMPLE) && family.empty()) {
        std::cerr << "error: --family is required\n";
        return kConfig;
      }
      if ((mode == GTAU_MEASURES_SAMPLE || mode == GTAU_MEASURES_COMPARE) && !seed) {
        std::cerr << "error: --seed is required for sampling\n";
        return kConfig;
      }
      gtau_measure_params p{family.c_str(), u.c_str(), q, measure_cap, mn, trials, seed.value_or(0), seed ? 1 : 0};
      gtau_report* rep = nullptr;
      return finish(gtau_measures(mode, &p, &rep), &rep, common);
    };
  });

  auto* orbits = app.add_subcommand("orbits", "Congruence orbits a g a' and stabilizers");
  orbits->add_option("--n", n)->required();
  orbits->add_option("--q", q)->required();
  auto* orbit_modes = orbits->add_option_group("mode");
  bool o_gl = false, o_sl = false, stabilizers = false, structure = false;
  orbit_modes->add_flag("--gl", o_gl, "GL orbits (default)");
  orbit_modes->add_flag("--sl", o_sl, "SL orbits and their splitting");
  orbit_modes->add_flag("--stabilizers", stabilizers, "Smallest stabilizer against the bound");
  orbit_modes->add_flag("--structure", structure, "Solution counts and orbits of gg^tau = h");
  orbit_modes->require_option(0, 1);
  add_common(orbits, common);
  orbits->callback([&] {
    run = [&] {
      gtau_orbits_mode mode = GTAU_ORBITS_GL;
      if (o_sl) mode = GTAU_ORBITS_SL;
      if (stabilizers) mode = GTAU_ORBITS_STABILIZERS;
      if (structure) mode = GTAU_ORBITS_STRUCTURE;
      gtau_report* rep = nullptr;
      return finish(gtau_orbits(mode, n, q, &rep), &rep, common);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfig;
  }
  if (common.cap && gtau_set_enum_cap(*common.cap) != GTAU_OK) {
    std::cerr << "error: " << gtau_last_error() << "\n";
    return kConfig;
  }
  if (!run) return kConfig;
  return run();
}
