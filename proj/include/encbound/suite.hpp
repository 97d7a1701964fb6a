// SPDX-License-Identifier: Apache-2.0
#pragma once

// The acceptance battery: nine criteria with pinned seeds and tolerances,
// plus a quick subset for smoke runs.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "encbound/ledger.hpp"

namespace encbound::suite {

struct CriterionResult {
  /// 1..9 for acceptance criteria; 0 for extra smoke experiments.
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  /// Measured numbers, including fitted constants kept for regression.
  NamedValues values;
  double wall_ms = 0.0;
};

struct SuiteResult {
  std::string name;
  std::vector<CriterionResult> criteria;
  bool pass() const;
};

inline constexpr int kCriterionCount = 9;

/// Runs one acceptance criterion (1..9); others throw std::out_of_range.
CriterionResult run_criterion(int id);

/// "acceptance" runs every criterion; "quick" runs the exhaustive and
/// numeric ones plus three fast experiments. Unknown names throw
/// std::out_of_range.
SuiteResult run_suite(std::string_view name);

/// One line per criterion: "criterion <id> <name>: PASS|FAIL (<detail>)".
std::string summary_line(const CriterionResult& r);
nlohmann::json to_json(const SuiteResult& s, bool include_timing = true);

}  // namespace encbound::suite
