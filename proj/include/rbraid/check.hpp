// Copyright 2026 The rbraid Authors
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

#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "rbraid/matrix.hpp"

namespace rbraid {

/// Outcome of a batch of named exact identities.
struct CheckReport {
  struct Entry {
    std::string name;
    bool passed = false;
    std::string detail;
  };
  std::vector<Entry> entries;

  void add(std::string name, bool passed, std::string detail = {}) {
    entries.push_back({std::move(name), passed, std::move(detail)});
  }
  void append(const CheckReport& other) {
    entries.insert(entries.end(), other.entries.begin(), other.entries.end());
  }
  bool all_passed() const {
    return std::all_of(entries.begin(), entries.end(), [](const Entry& e) { return e.passed; });
  }
  std::vector<Entry> failures() const {
    std::vector<Entry> out;
    for (const auto& e : entries)
      if (!e.passed) out.push_back(e);
    return out;
  }
};

/// Adds a pass/fail entry comparing two matrices; the detail names the first
/// differing entry on failure.
template <class T>
bool check_equal(CheckReport& report, std::string name, const Matrix<T>& lhs, const Matrix<T>& rhs) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    report.add(std::move(name), false, "shape " + lhs.shape() + " vs " + rhs.shape());
    return false;
  }
  auto diff = first_difference(lhs, rhs);
  if (!diff) {
    report.add(std::move(name), true);
    return true;
  }
  auto [r, c] = *diff;
  std::string detail = "first difference at (" + std::to_string(r) + "," + std::to_string(c) + ")";
  if constexpr (std::is_same_v<T, FieldElement>)
    detail += ": " + lhs(r, c).to_string() + " vs " + rhs(r, c).to_string();
  else
    detail += ": " + lhs(r, c).get_str() + " vs " + rhs(r, c).get_str();
  report.add(std::move(name), false, std::move(detail));
  return false;
}

}  // namespace rbraid
