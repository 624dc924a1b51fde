#pragma once

#include <stdexcept>
#include <string>

namespace jcs {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Result not representable (e.g. an outage that underflowed).
class RangeError : public std::range_error {
public:
    using std::range_error::range_error;
};

// Iterative method gave up; carries the best estimate it had.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double estimate, double error_bound)
        : std::runtime_error(what), estimate_(estimate), error_bound_(error_bound) {}

    double estimate() const noexcept { return estimate_; }
    double error_bound() const noexcept { return error_bound_; }

private:
    double estimate_;
    double error_bound_;
};

// Malformed configuration document or invalid parameter set.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace jcs
