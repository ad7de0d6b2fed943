#pragma once

#include <stdexcept>
#include <string>

namespace quintet {

// Search or factorization work exceeded its configured budget.
struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Requested result cannot be certified at the current working precision.
struct NeedsMorePrecision : std::runtime_error {
  explicit NeedsMorePrecision(const std::string& what) : std::runtime_error(what) {}
};

// A numeric routine (quadrature, root iteration) failed to converge.
struct NumericFailure : std::runtime_error {
  explicit NumericFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace quintet
