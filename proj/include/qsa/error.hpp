#pragma once

#include <stdexcept>
#include <string>

namespace qsa {

// Base class for every failure raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed arguments, out-of-range colors, inconsistent gradings.
class InvalidInput : public Error {
public:
    using Error::Error;
};

// Operands from different flavors, or an operation not defined for a flavor.
class FlavorMismatch : public Error {
public:
    using Error::Error;
};

class NotImplemented : public Error {
public:
    using Error::Error;
};

// The symmetrization size limit was exceeded.
class GuardExceeded : public Error {
public:
    using Error::Error;
};

// An exact division that had to succeed did not.
class DivisionFailure : public Error {
public:
    using Error::Error;
};

// A broken internal invariant; always a bug.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace qsa
