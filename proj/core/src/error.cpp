#include "uavplace/error.hpp"

namespace uavplace {

ParseError::ParseError(std::string field, const std::string& message)
    : Error("scenario field '" + field + "': " + message), field_(std::move(field)) {}

BudgetError::BudgetError(unsigned long long required, unsigned long long budget)
    : Error("lattice needs " + std::to_string(required) + " evaluations but the budget is " +
            std::to_string(budget) + "; raise the budget or coarsen the resolution"),
      required_(required),
      budget_(budget) {}

}  // namespace uavplace
