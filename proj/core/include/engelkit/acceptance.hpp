#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace engelkit {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

// Runs every reproduction criterion in order, streaming one pass/fail line
// per criterion when `progress` is given. Deterministic: all randomized
// suites use fixed seeds.
std::vector<CriterionResult> run_acceptance(std::ostream* progress = nullptr);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace engelkit
