#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace combquad {

/// Base of every error raised by the library. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input outside the mathematical domain of an operation (sqrt of a negative, a >= b, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A value cannot be held by the requested exact type (irrational weight, factorization bound).
class RepresentationError : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

class DegenerateNodesError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// Integrand evaluation failed (pole, log of non-positive, unsupported in exact mode).
class EvaluationError : public Error {
public:
    using Error::Error;
};

class NumericError : public Error {
public:
    using Error::Error;
};

/// Invariant violation that valid input can never trigger.
class InternalError : public Error {
public:
    using Error::Error;
};

class SyntaxError : public Error {
public:
    SyntaxError(const std::string& message, std::size_t offset)
        : Error(message + " at offset " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace combquad
