#pragma once

// Search budgets shared across the exhaustive solvers. Budgets are explicit
// parameters and exhaustion throws; no operation silently truncates.

#include <stdexcept>

namespace resmatch {

class BudgetExceededError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class EnumerationLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SearchLimits {
    long long nodes = 50'000'000;
};

}  // namespace resmatch
