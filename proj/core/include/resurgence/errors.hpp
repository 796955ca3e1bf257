#pragma once

#include <stdexcept>
#include <string>

namespace resurgence {

/// Base class for all domain errors raised by the library. The CLI maps
/// these to exit code 1 (usage errors are handled by the parser, exit 2).
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid input data: broken invariants, out-of-range arguments,
/// malformed files.
struct ValidationError : Error {
  using Error::Error;
};

/// The path planner exhausted its search without reaching the target.
/// This means "not found at this grid resolution / length budget",
/// not "provably no path exists".
struct PlanNotFound : Error {
  using Error::Error;
};

/// A numerical procedure left its domain of validity: node clearance
/// collapse, nonpositive D, insufficient continuation radius,
/// quadrature non-convergence, exceeded error budget.
struct NumericalError : Error {
  using Error::Error;
};

}  // namespace resurgence
