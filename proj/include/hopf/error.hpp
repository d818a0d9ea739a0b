#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hopf {

// Base class for all errors thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Arithmetic between scalars living in different quadratic extensions.
class FieldMismatch : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

// Attempt to give a non-invertible generator a negative exponent.
class NegativePower : public Error {
public:
    using Error::Error;
};

class InvalidParameter : public Error {
public:
    using Error::Error;
};

// A derived presentation failed its own structure checks.
class AxiomFailure : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};

class UnknownGenerator : public Error {
public:
    using Error::Error;
};

}  // namespace hopf
