#pragma once

#include <stdexcept>
#include <string>

namespace vmodel {

// Base of every error the library raises. The CLI maps all of these to
// exit code 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A configured size cap (edges, tensor width, pins, vertices) was exceeded.
class CapExceeded : public Error {
public:
    using Error::Error;
};

// Input violates an operation's precondition (bad pin map, mismatched
// labels, mixed scalar rings, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

// A table-backed graph parameter was asked for a graph it does not list.
class OutsideTable : public Error {
public:
    using Error::Error;
};

// Malformed file or text input.
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace vmodel
