#pragma once

#include <stdexcept>
#include <string>

namespace rlz {

// An oracle or simulator ran out of its configured work budget. Callers must
// treat this as "unknown", never as a negative answer.
struct budget_error : std::runtime_error {
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// A closure loop failed to reach its fixpoint within the iteration budget.
// The budgets are generous over the guaranteed bounds, so this signals a bug
// rather than an input property.
struct iteration_budget_error : std::runtime_error {
  explicit iteration_budget_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rlz
