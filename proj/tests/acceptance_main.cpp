// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line each. Exit 0 iff all pass.

#include <iostream>

#include "colorcount/parallel.hpp"
#include "colorcount/verify.hpp"

int main() {
  const bool ok = colorcount::verify::run_acceptance(std::cout, colorcount::kDefaultBudget,
                                                     colorcount::default_worker_count());
  return ok ? 0 : 1;
}
