#pragma once

#include <stdexcept>
#include <string>

namespace gapcert {

/// Mismatched qubit counts between operands.
struct DimensionError : std::invalid_argument {
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

/// Input outside the mathematical domain of an operation.
struct DomainError : std::invalid_argument {
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// Problem size beyond a configured cap.
struct ResourceError : std::runtime_error {
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical solver did not reach the requested tolerance.
struct SolverError : std::runtime_error {
  explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gapcert
