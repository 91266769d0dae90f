#pragma once

#include <stdexcept>
#include <string>

namespace gspt {

// Base of every error raised by the library. The CLI maps subclasses onto
// exit codes, so keep the hierarchy flat.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class ContextMismatch : public Error {
public:
    using Error::Error;
};

class NotInvertible : public Error {
public:
    using Error::Error;
};

class NotSymplecticSimilitude : public Error {
public:
    using Error::Error;
};

class NotSaturated : public Error {
public:
    using Error::Error;
};

class NotMaximalIsotropic : public Error {
public:
    using Error::Error;
};

class NotIsotropicModL : public Error {
public:
    using Error::Error;
};

class NotTotallyIsotropic : public Error {
public:
    using Error::Error;
};

// Raised when an exhaustive scan would exceed its configured budget.
// estimate is the decimal size of the (pruned) search space.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(const std::string& what, std::string estimate)
        : Error(what + " (estimated space " + estimate + ")"), estimate_(std::move(estimate)) {}

    const std::string& estimate() const noexcept { return estimate_; }

private:
    std::string estimate_;
};

}  // namespace gspt
