#pragma once

#include <stdexcept>
#include <string>

namespace tau4 {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input.
class ValidationError : public Error {
public:
    using Error::Error;
};

// A precondition of an operation is not met by otherwise well-formed input.
class DomainError : public Error {
public:
    using Error::Error;
};

// Enumeration or recursion size refused.
class BoundExceeded : public Error {
public:
    using Error::Error;
};

class OverflowError : public Error {
public:
    using Error::Error;
};

class NotStablyDiagonalizable : public Error {
public:
    using Error::Error;
};

}  // namespace tau4
