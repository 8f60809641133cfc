#pragma once

#include <stdexcept>
#include <string>

namespace waring {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (polynomials, scalars, decomposition files).
struct ParseError : Error {
    using Error::Error;
};

/// An operation's precondition was violated (wrong field, degree, dimensions...).
struct PreconditionError : Error {
    using Error::Error;
};

/// An internal size or iteration cap was exceeded.
struct LimitError : Error {
    using Error::Error;
};

}  // namespace waring
