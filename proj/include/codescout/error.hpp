#pragma once

#include <stdexcept>
#include <string>

namespace codescout {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Caller passed a value outside an operation's domain.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

// Work refused because it exceeds an enumeration or memory limit.
class LimitExceeded : public Error {
public:
    using Error::Error;
};

// A structural identity failed (profile mass checks, G*H^T != 0, ...).
class InvariantViolation : public Error {
public:
    using Error::Error;
};

// Malformed file or text input.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace codescout
