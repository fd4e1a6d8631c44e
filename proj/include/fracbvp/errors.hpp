#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fracbvp {

/// Root of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Gamma evaluated at zero or a negative integer.
class PoleError : public Error {
public:
    using Error::Error;
};

/// Falling factorial whose numerator Gamma factor is infinite.
class UndefinedValue : public Error {
public:
    using Error::Error;
};

/// No grid point falls inside a requested index window.
class EmptyWindow : public Error {
public:
    using Error::Error;
};

class DegenerateColumn : public Error {
public:
    using Error::Error;
};

class SingularSystem : public Error {
public:
    using Error::Error;
};

/// The boundary functional satisfies phi(alpha) == 1, so the implicit
/// coupling y = w + alpha * phi(y) has no unique resolution.
class ResonantFunctional : public Error {
public:
    using Error::Error;
};

class SamplingFailure : public Error {
public:
    using Error::Error;
};

// Expression language

class ExpressionError : public Error {
public:
    using Error::Error;
};

class SyntaxError : public ExpressionError {
public:
    SyntaxError(const std::string& what, std::size_t offset)
        : ExpressionError(what + " at offset " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

class UnknownIdentifier : public ExpressionError {
public:
    using ExpressionError::ExpressionError;
};

class ArityError : public ExpressionError {
public:
    using ExpressionError::ExpressionError;
};

/// Evaluation hit a pole, a domain error, or produced a non-finite value.
class EvalPole : public ExpressionError {
public:
    using ExpressionError::ExpressionError;
};

}  // namespace fracbvp
