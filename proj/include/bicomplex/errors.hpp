// Error types shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace bcx {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Two matrices (or matrix components) do not have compatible shapes.
class ShapeMismatch : public Error {
public:
    using Error::Error;
};

// A square-only operation was invoked on a rectangular matrix.
class NotSquare : public Error {
public:
    using Error::Error;
};

// Operator/vector sizes disagree.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

// An operation required an idempotent input and got something else.
class NotIdempotent : public Error {
public:
    using Error::Error;
};

// Invalid generation request (index/rank out of range, bad bound).
class BadSpec : public Error {
public:
    using Error::Error;
};

// Basis construction got a matrix with zero determinant.
class SingularBasis : public Error {
public:
    using Error::Error;
};

// Malformed input text; `context` names the offending file/field.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::string context_)
        : Error(context_.empty() ? message : message + " (" + context_ + ")"),
          context(std::move(context_)) {}
    explicit ParseError(const std::string& message) : Error(message) {}

    std::string context;
};

} // namespace bcx
