#pragma once

#include <stdexcept>
#include <string>

namespace frobwitt {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid user input (bad prime, malformed polynomial, mismatched contexts...).
// CLI maps these to exit code 2.
struct InputError : Error {
    using Error::Error;
};

struct NonPrimeError : InputError {
    using InputError::InputError;
};

struct DegreeError : InputError {
    using InputError::InputError;
};

struct BadPrimeError : InputError {
    using InputError::InputError;
};

struct ContextMismatchError : InputError {
    using InputError::InputError;
};

struct ParseInputError : InputError {
    using InputError::InputError;
};

struct SingularCurveError : InputError {
    using InputError::InputError;
};

// An enumeration would exceed the configured budget. Carries the number of
// evaluations the request would have needed. CLI maps this to exit code 3.
struct BudgetExceededError : Error {
    unsigned long long required;
    explicit BudgetExceededError(unsigned long long req)
        : Error("enumeration budget exceeded, needs " + std::to_string(req) + " evaluations"),
          required(req) {}
};

// Escalation cap reached without closing a dimension gap.
struct CapExceededError : Error {
    using Error::Error;
};

struct NotInvariantError : Error {
    using Error::Error;
};

struct ZeroVectorError : Error {
    using Error::Error;
};

struct UnsupportedCohomologyProfileError : Error {
    using Error::Error;
};

struct NotOrderPError : Error {
    using Error::Error;
};

struct NotExactError : Error {
    using Error::Error;
};

struct DecompositionMismatchError : Error {
    using Error::Error;
};

}  // namespace frobwitt
