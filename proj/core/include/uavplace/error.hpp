#pragma once

#include <stdexcept>
#include <string>

namespace uavplace {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid configuration: building dimensions, solver settings, radio setup.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Argument outside the domain of a formula (negative distance, angle > 90 deg).
class DomainError : public Error {
public:
    using Error::Error;
};

/// UAV coincides with a user, so the link has no direction.
class DegenerateLinkError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Malformed scenario document. `field()` names the offending JSON path.
class ParseError : public Error {
public:
    ParseError(std::string field, const std::string& message);

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// Exhaustive search would exceed its evaluation budget.
class BudgetError : public Error {
public:
    BudgetError(unsigned long long required, unsigned long long budget);

    unsigned long long required() const noexcept { return required_; }
    unsigned long long budget() const noexcept { return budget_; }

private:
    unsigned long long required_;
    unsigned long long budget_;
};

/// No initial particle produced a finite cost.
class InitializationError : public Error {
public:
    using Error::Error;
};

}  // namespace uavplace
