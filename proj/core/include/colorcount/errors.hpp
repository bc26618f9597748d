#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace colorcount {

// Default elementary-step limit shared by every enumeration entry point.
// CLI overrides it via --budget / COLORCOUNT_BUDGET.
inline constexpr long long kDefaultBudget = 100'000'000;

// Predicted or consumed work exceeded the configured budget. The message
// always names the bound that triggered the refusal.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input (graph6 line, family spec, matrix file).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_ = 0;
};

// Structurally invalid arguments (bad family size, cover/base mismatch, ...).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace colorcount
