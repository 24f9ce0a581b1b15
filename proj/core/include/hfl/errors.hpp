#pragma once

#include <stdexcept>
#include <string>

namespace hfl {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid argument or precondition violation (bad n, out-of-range (c,s), ...).
class InvalidArgument : public Error {
public:
  explicit InvalidArgument(const std::string& what) : Error(what) {}
};

/// Full state enumeration would exceed the configured memory budget.
class BudgetError : public Error {
public:
  BudgetError(int grid_size, const std::string& what)
      : Error(what), grid_size(grid_size) {}
  int grid_size;
};

/// Exact Laurent division failed: a coefficient would go negative.
/// This always indicates an upstream bug (gradings or differential),
/// so it is fatal rather than recoverable.
class NonDivisibleError : public Error {
public:
  explicit NonDivisibleError(const std::string& what) : Error(what) {}
};

}  // namespace hfl
