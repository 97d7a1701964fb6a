// SPDX-License-Identifier: Apache-2.0
#pragma once

// JSON and CSV renderings of bounds and experiment reports.

#include <string>

#include <json.hpp>

#include "encbound/experiments.hpp"
#include "encbound/ledger.hpp"

namespace encbound::report {

/// Integral doubles below 2^53 become JSON integers; non-finite values null.
nlohmann::json number(double x);
nlohmann::json to_json(const NamedValues& values);
nlohmann::json to_json(const TailBound& bound);
nlohmann::json to_json(const experiments::Check& check);
/// Flat headline fields of the primary check, followed by every check,
/// statistic and histogram. wall_ms is omitted when include_timing is false.
nlohmann::json to_json(const experiments::ExperimentReport& report, bool include_timing = true);

/// Long-format CSV: header "record,name,field,value", numbers with 17
/// significant digits.
std::string to_csv(const TailBound& bound);
std::string to_csv(const experiments::ExperimentReport& report, bool include_timing = true);

/// printf("%.17g"), with non-finite values spelled nan, inf, -inf.
std::string format_number(double x);

}  // namespace encbound::report
