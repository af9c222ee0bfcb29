#pragma once

#include <stdexcept>
#include <string>

namespace thermgrav {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Iterative evaluation ran out of budget. Carries the best estimate reached.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double best_estimate)
        : std::runtime_error(what), best_estimate_(best_estimate) {}

    double best_estimate() const noexcept { return best_estimate_; }

private:
    double best_estimate_;
};

/// A search completed without finding what was asked for.
class NotFoundError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace thermgrav
