#pragma once

#include <stdexcept>
#include <string>

namespace trigzero {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Zero counting was requested for a polynomial whose coefficients all vanish.
class IdenticallyZero : public Error {
public:
    IdenticallyZero() : Error("polynomial is identically zero; its zero count is undefined") {}
    explicit IdenticallyZero(const std::string& what) : Error(what) {}
};

/// A root of the unit-circle lift fell inside the ambiguous band and strict
/// certification was requested.
class NumericallyAmbiguous : public Error {
public:
    using Error::Error;
};

/// Exact counting is not available for the requested polynomial kind.
class UnsupportedExact : public Error {
public:
    using Error::Error;
};

/// A sign sequence was entirely zero.
class AllZero : public Error {
public:
    AllZero() : Error("sequence is entirely zero") {}
};

/// Every draw of a Monte Carlo experiment was identically zero.
class AllDrawsZero : public Error {
public:
    AllDrawsZero() : Error("every sampled coefficient vector was identically zero") {}
    explicit AllDrawsZero(const std::string& what) : Error(what) {}
};

/// Invalid distribution, ensemble or experiment parameters.
class InvalidSpec : public Error {
public:
    using Error::Error;
};

/// Malformed coefficient text or numeric literal.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace trigzero
