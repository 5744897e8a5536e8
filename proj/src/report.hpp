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

#ifndef GTAU_REPORT_HPP
#define GTAU_REPORT_HPP

#include <string>
#include <vector>

#include "json.hpp"

namespace gtau {

using Record = nlohmann::ordered_json;

/// A stream of flat records plus an overall verdict. A report fails as soon
/// as one embedded assertion fails; the first failure message is kept.
class Report {
 public:
  void add(Record r) { records_.push_back(std::move(r)); }

  /// Records an assertion. The record gets a "status" field.
  void check(bool ok, Record r, const std::string& failure_message);

  void fail(const std::string& message);
  void merge(const Report& other);

  bool passed() const { return passed_; }
  const std::string& failure() const { return failure_; }
  const std::vector<Record>& records() const { return records_; }

  std::string json_lines() const;
  /// Header is the union of keys in first-seen order.
  std::string csv() const;

 private:
  std::vector<Record> records_;
  bool passed_ = true;
  std::string failure_;
};

}  // namespace gtau

#endif  // GTAU_REPORT_HPP
