#pragma once

#include <stdexcept>
#include <string>

namespace dedekind {

/// Base of every error the library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument violates an operation's precondition.
class DomainError : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public DomainError {
public:
    DivisionByZero() : DomainError("division by zero") {}
};

/// Text that could not be parsed into a domain value.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace dedekind
