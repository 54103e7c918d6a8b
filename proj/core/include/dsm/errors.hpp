#pragma once

#include <stdexcept>
#include <string>

namespace dsm {

/// Base for every error raised by the library. The CLI maps any of these to a
/// nonzero exit status with the message printed on stderr.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation (non-finite input,
/// coincident source/observation points, division by a zero parameter).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Inconsistent numeric configuration (grid step, truncation order, quadrature resolution).
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Malformed scenario or data file. The message names the offending field.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Well-formed input that violates a domain invariant.
class ValidationError : public Error {
public:
    using Error::Error;
};

class DegenerateInputError : public Error {
public:
    using Error::Error;
};

class UnsupportedModeError : public Error {
public:
    using Error::Error;
};

class UsageError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace dsm
