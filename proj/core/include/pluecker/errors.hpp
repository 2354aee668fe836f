#pragma once

#include <stdexcept>
#include <string>

namespace plk {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FieldMismatch : Error {
    FieldMismatch() : Error("operands live in different fields") {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

/// A stated precondition of an operation does not hold.
struct Precondition : Error {
    using Error::Error;
};

/// Randomized construction hit a degenerate sample; the caller should retry
/// with fresh randomness.
struct GenericityFailure : Error {
    using Error::Error;
};

struct SizeCapExceeded : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

} // namespace plk
