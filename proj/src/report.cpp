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

#include "report.hpp"

#include <algorithm>
#include <sstream>

namespace gtau {

void Report::check(bool ok, Record r, const std::string& failure_message) {
  r["status"] = ok ? "pass" : "fail";
  records_.push_back(std::move(r));
  if (!ok) fail(failure_message);
}

void Report::fail(const std::string& message) {
  if (passed_) failure_ = message;
  passed_ = false;
}

void Report::merge(const Report& other) {
  for (const auto& r : other.records_) records_.push_back(r);
  if (!other.passed_) fail(other.failure_);
}

std::string Report::json_lines() const {
  std::ostringstream out;
  for (const auto& r : records_) out << r.dump() << "\n";
  return out.str();
}

namespace {

std::string csv_cell(const Record& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

}  // namespace

std::string Report::csv() const {
  std::vector<std::string> header;
  for (const auto& r : records_) {
    for (const auto& item : r.items()) {
      if (std::find(header.begin(), header.end(), item.key()) == header.end()) header.push_back(item.key());
    }
  }
  std::ostringstream out;
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
  out << "\n";
  for (const auto& r : records_) {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (i) out << ",";
      if (r.contains(header[i])) out << csv_cell(r[header[i]]);
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace gtau
