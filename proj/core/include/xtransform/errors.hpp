#pragma once

#include <stdexcept>
#include <string>

namespace xtransform {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of the operation
/// (evaluation point on the support, exponent out of range, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// An iterative scheme (quadrature refinement, bracketed root find,
/// series truncation) failed to reach the requested tolerance. The
/// message names the offending subinterval / bracket / tail bound.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// Malformed input: schema violations, values out of range, parse
/// failures, sequences shorter than an operation requires.
class InputError : public Error {
public:
    using Error::Error;
};

} // namespace xtransform
