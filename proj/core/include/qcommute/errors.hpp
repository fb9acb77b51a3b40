#pragma once

#include <stdexcept>
#include <string>

namespace qcommute {

// Thrown when an enumeration would exceed its step budget.  Callers that
// expose budgets on the command line map this to a dedicated exit code.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an internal invariant is violated (e.g. a division that is
// provably exact leaves a remainder).  Always indicates an engine bug, never
// bad user input.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace qcommute
