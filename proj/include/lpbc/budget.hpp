#pragma once

#include <cstdint>

#include "lpbc/errors.hpp"

namespace lpbc {

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

// Node counter shared across a search. Exceeding the limit raises
// BudgetExceeded, which callers must keep distinct from a negative result.
struct Budget {
  std::uint64_t limit = kDefaultNodeBudget;
  std::uint64_t used = 0;

  void charge(std::uint64_t nodes = 1) {
    used += nodes;
    if (used > limit) fail(Errc::budget_exceeded, "search node budget exhausted");
  }
};

}  // namespace lpbc
