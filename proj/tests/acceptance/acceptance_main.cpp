// SPDX-License-Identifier: Apache-2.0
// Runs the nine acceptance criteria, prints one line each, and writes the
// measured values (fitted constants included) to a JSON file.

#include <fstream>
#include <iostream>
#include <string>

#include "encbound/suite.hpp"

int main(int argc, char** argv) {
  const std::string path = argc > 1 ? argv[1] : "acceptance_report.json";
  encbound::suite::SuiteResult result;
  result.name = "acceptance";
  for (int id = 1; id <= encbound::suite::kCriterionCount; ++id) {
    result.criteria.push_back(encbound::suite::run_criterion(id));
    std::cout << encbound::suite::summary_line(result.criteria.back()) << std::endl;
  }
  std::ofstream out(path);
  out << encbound::suite::to_json(result).dump(2) << "\n";
  if (!out) {
    std::cerr << "could not write " << path << "\n";
    return 1;
  }
  const bool pass = result.pass();
  std::cout << "acceptance: " << (pass ? "PASS" : "FAIL") << std::endl;
  return pass ? 0 : 1;
}
