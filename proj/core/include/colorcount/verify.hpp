#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "colorcount/errors.hpp"

namespace colorcount::verify {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double seconds = 0.0;
  double limit_seconds = 0.0;
  std::string detail;
};

// Runs the full regression suite. Self-contained: no network, no external
// data. Each criterion also fails when it exceeds its stated time limit.
std::vector<CriterionResult> run_acceptance(long long budget = kDefaultBudget, int workers = 1);

// Prints one PASS/FAIL line per criterion; true iff everything passed.
bool run_acceptance(std::ostream& out, long long budget = kDefaultBudget, int workers = 1);

}  // namespace colorcount::verify
