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

#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "classcount.hpp"
#include "classdata.hpp"
#include "formulas.hpp"
#include "gtau/gtau.h"
#include "matrix.hpp"
#include "measures.hpp"
#include "oracle.hpp"
#include "qseries.hpp"
#include "symfunc.hpp"

struct gtau_report {
  explicit gtau_report(gtau::Report r) : report(std::move(r)) {
    for (const auto& rec : report.records()) lines.push_back(rec.dump());
    json = report.json_lines();
    csv = report.csv();
  }
  gtau::Report report;
  std::vector<std::string> lines;
  std::string json;
  std::string csv;
};

struct gtau_class {
  gtau::ClassData data;
  std::string text;
};

namespace {

using namespace gtau;

thread_local std::string last_error;

template <typename F>
gtau_status guard(F&& f) {
  last_error.clear();
  try {
    f();
    return GTAU_OK;
  } catch (const InvalidArgument& e) {
    last_error = e.what();
    return GTAU_INVALID_ARGUMENT;
  } catch (const CapExceeded& e) {
    last_error = e.what();
    return GTAU_CAP_EXCEEDED;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return GTAU_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return GTAU_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return GTAU_INTERNAL;
  }
}

void require(bool ok, const char* message) {
  if (!ok) throw InvalidArgument(message);
}

void emit(gtau_report** out, Report r) { *out = new gtau_report(std::move(r)); }

gtau_status write_string(const std::string& s, char* buf, std::size_t cap, std::size_t* needed) {
  if (needed) *needed = s.size() + 1;
  if (buf == nullptr || cap < s.size() + 1) {
    last_error = "buffer too small";
    return GTAU_INVALID_ARGUMENT;
  }
  std::memcpy(buf, s.c_str(), s.size() + 1);
  return GTAU_OK;
}

template <typename F>
gtau_status value_call(char* buf, std::size_t cap, std::size_t* needed, F&& f) {
  std::string s;
  const gtau_status st = guard([&] { s = f(); });
  if (st != GTAU_OK) return st;
  return write_string(s, buf, cap, needed);
}

Record class_record(const ClassData& c, const Integer& order) {
  const Rational p = prob_ggtau(c);
  return Record{{"class", c.to_string()},
                {"probability", to_fraction_string(p)},
                {"solutions_per_element", count_solutions(c).get_str()},
                {"class_total", require_integer(p * Rational(order), "class total").get_str()}};
}

Report identity_report(const std::string& name, int vars, int deg) {
  if (name == "hallishall") {
    require(deg >= 1 && deg <= 6, "hallishall needs 1 <= deg <= 6");
    return hall_brute_report(deg, {2, 3});
  }
  if (name == "euler" || name == "qs1" || name == "qs2" || name == "qs3") {
    require(deg >= 0, "deg must be >= 0");
    return verify_qsum(parse_qsum(name), deg);
  }
  return verify_identity(parse_identity(name), vars, deg);
}

Report sp_unipotent_report(int n, unsigned q) {
  require(n >= 2 && n % 2 == 0, "Sp needs even n >= 2");
  Field::get(q);
  Report rep;
  Rational total = 0;
  for (const Partition& mu : enumerate_partitions(n)) {
    const Rational p = prob_unipotent(mu, Rational(q), UnipotentTarget::kSp);
    total += p;
    rep.add(Record{{"n", n}, {"q", q}, {"type", mu.to_string()}, {"proportion", to_fraction_string(p)}});
  }
  // Sp(2m, q) has q^{2m^2} unipotent elements
  const long m = n / 2;
  const Rational expected = fraction(ipow(Integer(q), static_cast<unsigned long>(2 * m * m)), sp_order(n, Integer(q)));
  rep.check(total == expected,
            Record{{"check", "unipotent mass"}, {"total", to_fraction_string(total)}, {"expected", to_fraction_string(expected)}},
            "unipotent proportions do not sum to q^{2m^2}/|Sp|");
  return rep;
}

}  // namespace

extern "C" {

const char* gtau_version(void) { return "0.1.0"; }

const char* gtau_last_error(void) { return last_error.c_str(); }

uint64_t gtau_enum_cap(void) { return enumeration_cap(); }

gtau_status gtau_set_enum_cap(uint64_t cap) {
  return guard([&] { set_enumeration_cap(cap); });
}

int gtau_report_passed(const gtau_report* r) { return r && r->report.passed() ? 1 : 0; }

const char* gtau_report_failure(const gtau_report* r) { return r ? r->report.failure().c_str() : ""; }

size_t gtau_report_size(const gtau_report* r) { return r ? r->lines.size() : 0; }

const char* gtau_report_record(const gtau_report* r, size_t i) {
  if (!r || i >= r->lines.size()) return nullptr;
  return r->lines[i].c_str();
}

const char* gtau_report_json_lines(const gtau_report* r) { return r ? r->json.c_str() : ""; }

const char* gtau_report_csv(const gtau_report* r) { return r ? r->csv.c_str() : ""; }

void gtau_report_free(gtau_report* r) { delete r; }

gtau_status gtau_class_parse(const char* text, gtau_class** out) {
  return guard([&] {
    require(text != nullptr && out != nullptr, "null argument");
    ClassData c = ClassData::parse(text);
    std::string s = c.to_string();
    *out = new gtau_class{std::move(c), std::move(s)};
  });
}

const char* gtau_class_text(const gtau_class* c) { return c ? c->text.c_str() : ""; }

int gtau_class_n(const gtau_class* c) { return c ? c->data.n() : 0; }

void gtau_class_free(gtau_class* c) { delete c; }

gtau_status gtau_prob_ggtau(const gtau_class* c, char* buf, size_t cap, size_t* needed) {
  return value_call(buf, cap, needed, [&] {
    require(c != nullptr, "null class");
    return to_fraction_string(prob_ggtau(c->data));
  });
}

gtau_status gtau_count_solutions(const gtau_class* c, char* buf, size_t cap, size_t* needed) {
  return value_call(buf, cap, needed, [&] {
    require(c != nullptr, "null class");
    return count_solutions(c->data).get_str();
  });
}

gtau_status gtau_prob_sp_class(const gtau_class* c, char* buf, size_t cap, size_t* needed) {
  return value_call(buf, cap, needed, [&] {
    require(c != nullptr, "null class");
    return to_fraction_string(prob_sp_class(c->data));
  });
}

gtau_status gtau_coset_class_count(int n, unsigned q, char* buf, size_t cap, size_t* needed) {
  return value_call(buf, cap, needed, [&] { return coset_class_count(n, q).get_str(); });
}

gtau_status gtau_identity_verify(const char* name, int vars, int deg, gtau_report** out) {
  return guard([&] {
    require(name != nullptr && out != nullptr, "null argument");
    emit(out, identity_report(name, vars, deg));
  });
}

gtau_status gtau_count(int n, unsigned q, const char* class_text, gtau_report** out) {
  return guard([&] {
    require(out != nullptr, "null argument");
    require(n >= 1, "n must be >= 1");
    Field::get(q);
    const Integer order = gl_order(n, Integer(q));
    Report rep;
    if (class_text) {
      const ClassData c = ClassData::parse(class_text);
      require(c.n() == n, "class size does not match --n");
      require(c.q() == q, "class field does not match --q");
      Record r = class_record(c, order);
      r["n"] = n;
      r["q"] = q;
      rep.add(r);
    } else {
      Rational total = 0;
      for (const ClassData& c : enumerate_class_data(n, q, ClassPredicate::kReal)) {
        total += prob_ggtau(c);
        Record r = class_record(c, order);
        r["n"] = n;
        r["q"] = q;
        rep.add(r);
      }
      rep.check(total == 1, Record{{"check", "normalization"}, {"n", n}, {"q", q}, {"sum", to_fraction_string(total)}},
                "class probabilities do not sum to 1");
    }
    emit(out, std::move(rep));
  });
}

gtau_status gtau_histogram(int n, unsigned q, int brute, gtau_report** out) {
  return guard([&] {
    require(out != nullptr, "null argument");
    if (brute) {
      emit(out, histogram_report(brute_histogram(n, q)));
      return;
    }
    require(n >= 1, "n must be >= 1");
    Field::get(q);
    const Integer order = gl_order(n, Integer(q));
    Report rep;
    Integer total = 0;
    for (const ClassData& c : enumerate_class_data(n, q, ClassPredicate::kReal)) {
      const Integer k = require_integer(prob_ggtau(c) * Rational(order), "class total");
      if (k == 0) continue;
      total += k;
      rep.add(Record{{"n", n}, {"q", q}, {"class", c.to_string()}, {"formula", k.get_str()}});
    }
    rep.check(total == order, Record{{"check", "total"}, {"total", total.get_str()}, {"order", order.get_str()}},
              "class totals do not sum to |GL|");
    emit(out, std::move(rep));
  });
}

gtau_status gtau_gow_macdonald(int n, unsigned q, gtau_report** out) {
  return guard([&] {
    require(out != nullptr, "null argument");
    emit(out, gow_macdonald_report(n, q));
  });
}

gtau_status gtau_classes(gtau_classes_mode mode, int n, unsigned q, int brute, gtau_report** out) {
  return guard([&] {
    require(out != nullptr, "null argument");
    require(n >= 1, "n must be >= 1");
    Report rep;
    switch (mode) {
      case GTAU_CLASSES_COSET:
        rep.add(Record{{"n", n}, {"q", q}, {"k_coset", coset_class_count(n, q).get_str()}});
        if (brute) rep.merge(orbit_report(brute_congruence_orbits(GroupKind::kGL, n, q)));
        break;
      case GTAU_CLASSES_GL: {
        const Integer k = gl_class_count(n, q);
        if (brute) {
          const auto listed = static_cast<long>(enumerate_class_data(n, q).size());
          rep.check(k == listed, Record{{"n", n}, {"q", q}, {"k_gl", k.get_str()}, {"enumerated", listed}},
                    "k(GL) differs from the number of enumerated class data");
        } else {
          rep.add(Record{{"n", n}, {"q", q}, {"k_gl", k.get_str()}});
        }
        break;
      }
      case GTAU_CLASSES_TOTAL:
        if (brute) {
          rep.merge(total_class_report(n, q));
        } else {
          rep.add(Record{{"n", n}, {"q", q}, {"k_total", total_class_count(n, q).get_str()}});
        }
        break;
      case GTAU_CLASSES_BOUNDS:
        rep = bound_report(n, {q});
        break;
      case GTAU_CLASSES_ASY:
        require(n >= 2, "asy needs n >= 2");
        rep = asy_report(q, n % 2 == 0 ? Parity::kEven : Parity::kOdd, n / 2, Rational(1, 100));
        break;
      default:
        throw InvalidArgument("unknown classes mode");
    }
    emit(out, std::move(rep));
  });
}

gtau_status gtau_sp(gtau_sp_mode mode, int n, unsigned q, gtau_report** out) {
  return guard([&] {
    require(out != nullptr, "null argument");
    switch (mode) {
      case GTAU_SP_UNIPOTENT:
        emit(out, sp_unipotent_report(n, q));
        break;
      case GTAU_SP_STATS: {
        Report rep = sp_stats_report(brute_sp_stats(n, q));
        rep.merge(regss_report(n, q));
        emit(out, std::move(rep));
        break;
      }
      default:
        throw InvalidArgument("unknown sp mode");
    }
  });
}

gtau_status gtau_measures(gtau_measures_mode mode, const gtau_measure_params* p, gtau_report** out) {
  return guard([&] {
    require(out != nullptr && p != nullptr, "null argument");
    switch (mode) {
      case GTAU_MEASURES_CHECK: {
        require(p->family != nullptr && p->u != nullptr, "family and u are required");
        const PartitionMeasure m(parse_family(p->family), parse_rational(p->u), p->q);
        emit(out, normalization_check(m, p->cap));
        break;
      }
      case GTAU_MEASURES_SAMPLE: {
        require(p->family != nullptr && p->u != nullptr, "family and u are required");
        require(p->has_seed != 0, "sampling needs a seed");
        const PartitionMeasure m(parse_family(p->family), parse_rational(p->u), p->q);
        emit(out, sample_report(m, p->trials, p->seed));
        break;
      }
      case GTAU_MEASURES_COMPARE:
        require(p->has_seed != 0, "sampling needs a seed");
        emit(out, empirical_limit_compare(p->n, p->q, p->trials, p->seed));
        break;
      case GTAU_MEASURES_IDENTITY:
        emit(out, verify_product_identity(p->q, p->cap));
        break;
      default:
        throw InvalidArgument("unknown measures mode");
    }
  });
}

gtau_status gtau_orbits(gtau_orbits_mode mode, int n, unsigned q, gtau_report** out) {
  return guard([&] {
    require(out != nullptr, "null argument");
    switch (mode) {
      case GTAU_ORBITS_GL:
        emit(out, orbit_report(brute_congruence_orbits(GroupKind::kGL, n, q)));
        break;
      case GTAU_ORBITS_SL: {
        Report rep = orbit_report(brute_congruence_orbits(GroupKind::kSL, n, q));
        rep.merge(sl_orbit_report(n, q));
        emit(out, std::move(rep));
        break;
      }
      case GTAU_ORBITS_STABILIZERS:
        emit(out, min_stabilizer_report(n, q));
        break;
      case GTAU_ORBITS_STRUCTURE:
        emit(out, verify_orbit_structure(n, q));
        break;
      default:
        throw InvalidArgument("unknown orbits mode");
    }
  });
}

}  // extern "C"
