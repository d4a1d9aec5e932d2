#ifndef EBOUND_ERROR_HPP
#define EBOUND_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ebound {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

// Malformed text input (rationals, series, b-files).
class ParseError : public Error {
public:
    using Error::Error;
};

// Structurally invalid argument (wrong series order, mixed scalar kinds, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

// A numeric procedure failed to produce a result (non-convergence, a violated
// ordering that should hold).
class ComputationError : public Error {
public:
    using Error::Error;
};

} // namespace ebound

#endif
