#pragma once

#include <stdexcept>
#include <string>

namespace gausscop {

/// Argument outside an operation's domain.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An engine was asked to evaluate outside its validity region.
class EngineRejected : public DomainError {
public:
    using DomainError::DomainError;
};

/// A reduction identity is singular at the requested point; callers fall back.
class SingularParameter : public DomainError {
public:
    using DomainError::DomainError;
};

/// A numeric integral or series did not reach its tolerance.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double achieved_error)
        : std::runtime_error(what + " (achieved error estimate " + std::to_string(achieved_error) + ")"),
          achieved_error_(achieved_error) {}

    double achieved_error() const noexcept { return achieved_error_; }

private:
    double achieved_error_;
};

}  // namespace gausscop
