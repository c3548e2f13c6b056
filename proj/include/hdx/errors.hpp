#pragma once

#include <stdexcept>

namespace hdx {

// Malformed input file; the CLI maps this to its own exit code.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An exact computation would exceed the configured enumeration budget.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace hdx
