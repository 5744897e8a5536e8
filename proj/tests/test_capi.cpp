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

#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"
#include "gtau/gtau.h"
#include "json.hpp"

namespace {

using json = nlohmann::json;

std::string class_value(gtau_status (*fn)(const gtau_class*, char*, size_t, size_t*), const char* text) {
  gtau_class* c = nullptr;
  REQUIRE(gtau_class_parse(text, &c) == GTAU_OK);
  char buf[128];
  REQUIRE(fn(c, buf, sizeof buf, nullptr) == GTAU_OK);
  gtau_class_free(c);
  return buf;
}

json record(const gtau_report* r, size_t i) { return json::parse(gtau_report_record(r, i)); }

}  // namespace

TEST_CASE("version and error state") {
  CHECK(std::string(gtau_version()) == "0.1.0");
  gtau_class* c = nullptr;
  CHECK(gtau_class_parse("n=2; GF(6):1,1:[1,1]", &c) == GTAU_INVALID_ARGUMENT);
  CHECK(c == nullptr);
  CHECK(std::string(gtau_last_error()).find("prime power") != std::string::npos);
  CHECK(gtau_class_parse("n=1; GF(2):1,1:[1]", &c) == GTAU_OK);
  CHECK(std::string(gtau_last_error()).empty());
  gtau_class_free(c);
  CHECK(gtau_class_parse(nullptr, &c) == GTAU_INVALID_ARGUMENT);
}

TEST_CASE("class handles") {
  gtau_class* c = nullptr;
  REQUIRE(gtau_class_parse("n=4; GF(2):1,1,1:[1]; GF(2):1,1:[1,1]", &c) == GTAU_OK);
  CHECK(gtau_class_n(c) == 4);
  CHECK(std::string(gtau_class_text(c)) == "n=4; GF(2):1,1:[1,1]; GF(2):1,1,1:[1]");
  gtau_class_free(c);
}

TEST_CASE("exact values") {
  CHECK(class_value(gtau_prob_ggtau, "n=2; GF(2):1,1:[1,1]") == "2/3");
  CHECK(class_value(gtau_count_solutions, "n=2; GF(2):1,1:[1,1]") == "4");
  CHECK(class_value(gtau_count_solutions, "n=3; GF(2):1,1:[1,1,1]") == "28");
  CHECK(class_value(gtau_prob_ggtau, "n=2; GF(3):2,1:[2]") == "0/1");
  CHECK(class_value(gtau_prob_sp_class, "n=2; GF(3):2,1:[1,1]") == "1/24");
  char buf[16];
  CHECK(gtau_coset_class_count(2, 3, buf, sizeof buf, nullptr) == GTAU_OK);
  CHECK(std::string(buf) == "6");
}

TEST_CASE("buffer too small reports the needed size") {
  gtau_class* c = nullptr;
  REQUIRE(gtau_class_parse("n=2; GF(2):1,1:[1,1]", &c) == GTAU_OK);
  char tiny[2];
  size_t needed = 0;
  CHECK(gtau_prob_ggtau(c, tiny, sizeof tiny, &needed) == GTAU_INVALID_ARGUMENT);
  CHECK(needed == 4);
  std::vector<char> buf(needed);
  CHECK(gtau_prob_ggtau(c, buf.data(), buf.size(), &needed) == GTAU_OK);
  CHECK(std::string(buf.data()) == "2/3");
  gtau_class_free(c);
}

TEST_CASE("count report") {
  gtau_report* r = nullptr;
  REQUIRE(gtau_count(2, 2, nullptr, &r) == GTAU_OK);
  CHECK(gtau_report_passed(r) == 1);
  CHECK(std::string(gtau_report_failure(r)).empty());
  REQUIRE(gtau_report_size(r) == 4);
  bool identity_seen = false;
  for (size_t i = 0; i < gtau_report_size(r); ++i) {
    const json rec = record(r, i);
    if (rec.value("class", "") == "n=2; GF(2):1,1:[1,1]") {
      identity_seen = true;
      CHECK(rec["solutions_per_element"] == "4");
    }
  }
  CHECK(identity_seen);
  CHECK(gtau_report_record(r, 99) == nullptr);
  const std::string lines = gtau_report_json_lines(r);
  CHECK(std::count(lines.begin(), lines.end(), '\n') == 4);
  const std::string csv = gtau_report_csv(r);
  CHECK(csv.rfind("class,probability", 0) == 0);
  gtau_report_free(r);

  REQUIRE(gtau_count(2, 2, "n=2; GF(2):1,1,1:[1]", &r) == GTAU_OK);
  CHECK(gtau_report_size(r) == 1);
  CHECK(record(r, 0)["probability"] == "1/3");
  gtau_report_free(r);

  CHECK(gtau_count(3, 2, "n=2; GF(2):1,1,1:[1]", &r) == GTAU_INVALID_ARGUMENT);
  CHECK(gtau_count(2, 3, "n=2; GF(2):1,1,1:[1]", &r) == GTAU_INVALID_ARGUMENT);
  CHECK(gtau_count(0, 2, nullptr, &r) == GTAU_INVALID_ARGUMENT);
}

TEST_CASE("identity verification") {
  gtau_report* r = nullptr;
  REQUIRE(gtau_identity_verify("newhall", 3, 6, &r) == GTAU_OK);
  CHECK(gtau_report_passed(r) == 1);
  gtau_report_free(r);
  REQUIRE(gtau_identity_verify("newhall-perturbed", 3, 4, &r) == GTAU_OK);
  CHECK(gtau_report_passed(r) == 0);
  CHECK(std::string(gtau_report_failure(r)).find("x^[") != std::string::npos);
  gtau_report_free(r);
  REQUIRE(gtau_identity_verify("qs1", 0, 8, &r) == GTAU_OK);
  CHECK(gtau_report_passed(r) == 1);
  gtau_report_free(r);
  REQUIRE(gtau_identity_verify("hallishall", 0, 3, &r) == GTAU_OK);
  CHECK(gtau_report_passed(r) == 1);
  gtau_report_free(r);
  CHECK(gtau_identity_verify("nope", 3, 3, &r) == GTAU_INVALID_ARGUMENT);
  CHECK(gtau_identity_verify("hallishall", 0, 9, &r) == GTAU_INVALID_ARGUMENT);
}

TEST_CASE("enumeration cap") {
  const uint64_t saved = gtau_enum_cap();
  CHECK(gtau_set_enum_cap(100) == GTAU_OK);
  gtau_report* r = nullptr;
  CHECK(gtau_histogram(3, 2, 1, &r) == GTAU_CAP_EXCEEDED);
  CHECK(std::string(gtau_last_error()).find("cap") != std::string::npos);
  CHECK(gtau_set_enum_cap(saved) == GTAU_OK);
  REQUIRE(gtau_histogram(3, 2, 1, &r) == GTAU_OK);
  CHECK(gtau_report_passed(r) == 1);
  gtau_report_free(r);
  CHECK(gtau_set_enum_cap(0) == GTAU_INVALID_ARGUMENT);
}

TEST_CASE("group-level reports") {
  gtau_report* r = nullptr;
  REQUIRE(gtau_gow_macdonald(2, 3, &r) == GTAU_OK);
  CHECK(gtau_report_passed(r) == 1);
  gtau_report_free(r);

  for (gtau_classes_mode m : {GTAU_CLASSES_COSET, GTAU_CLASSES_GL, GTAU_CLASSES_TOTAL}) {
    REQUIRE(gtau_classes(m, 2, 2, 1, &r) == GTAU_OK);
    CHECK(gtau_report_passed(r) == 1);
    gtau_report_free(r);
  }
  REQUIRE(gtau_classes(GTAU_CLASSES_BOUNDS, 10, 3, 0, &r) == GTAU_OK);
  CHECK(gtau_report_passed(r) == 1);
  gtau_report_free(r);

  REQUIRE(gtau_sp(GTAU_SP_UNIPOTENT, 4, 3, &r) == GTAU_OK);
  CHECK(gtau_report_passed(r) == 1);
  gtau_report_free(r);
  REQUIRE(gtau_sp(GTAU_SP_STATS, 2, 2, &r) == GTAU_OK);
  CHECK(gtau_report_passed(r) == 1);
  gtau_report_free(r);
  CHECK(gtau_sp(GTAU_SP_STATS, 3, 2, &r) == GTAU_INVALID_ARGUMENT);

  for (gtau_orbits_mode m : {GTAU_ORBITS_GL, GTAU_ORBITS_SL, GTAU_ORBITS_STABILIZERS, GTAU_ORBITS_STRUCTURE}) {
    REQUIRE(gtau_orbits(m, 2, 2, &r) == GTAU_OK);
    CHECK(gtau_report_passed(r) == 1);
    gtau_report_free(r);
  }
}

TEST_CASE("measures") {
  gtau_report* r = nullptr;
  gtau_measure_params p{"o-even", "1", 2, 30, 10, 1000, 0, 0};
  REQUIRE(gtau_measures(GTAU_MEASURES_CHECK, &p, &r) == GTAU_OK);
  CHECK(gtau_report_passed(r) == 1);
  gtau_report_free(r);

  CHECK(gtau_measures(GTAU_MEASURES_SAMPLE, &p, &r) == GTAU_INVALID_ARGUMENT);
  p.has_seed = 1;
  p.seed = 99;
  p.trials = 20000;
  REQUIRE(gtau_measures(GTAU_MEASURES_SAMPLE, &p, &r) == GTAU_OK);
  CHECK(gtau_report_passed(r) == 1);
  const std::string first = gtau_report_json_lines(r);
  gtau_report_free(r);
  REQUIRE(gtau_measures(GTAU_MEASURES_SAMPLE, &p, &r) == GTAU_OK);
  CHECK(first == gtau_report_json_lines(r));
  gtau_report_free(r);

  p.cap = 8;
  REQUIRE(gtau_measures(GTAU_MEASURES_IDENTITY, &p, &r) == GTAU_OK);
  CHECK(gtau_report_passed(r) == 1);
  gtau_report_free(r);

  gtau_measure_params bad{"o-even", "3/2", 2, 30, 10, 1000, 0, 0};
  CHECK(gtau_measures(GTAU_MEASURES_CHECK, &bad, &r) == GTAU_INVALID_ARGUMENT);
  bad.u = "x";
  CHECK(gtau_measures(GTAU_MEASURES_CHECK, &bad, &r) == GTAU_INVALID_ARGUMENT);
  bad.family = "gl";
  bad.u = "1";
  CHECK(gtau_measures(GTAU_MEASURES_CHECK, &bad, &r) == GTAU_INVALID_ARGUMENT);
}
