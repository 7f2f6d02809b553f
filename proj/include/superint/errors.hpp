#pragma once

#include <stdexcept>
#include <string>

namespace superint {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Observable evaluated on a barrier wall, at the origin, or on a complex singular set.
class SingularPointError : public Error {
public:
    using Error::Error;
};

/// A formal radicand vanished, so the hyperbolic pair is undefined.
class DegenerateRadicalError : public Error {
public:
    using Error::Error;
};

/// A normalized sinh/cosh occupied more than one parity component.
class PurityViolation : public Error {
public:
    using Error::Error;
};

class BarrierCollisionError : public Error {
public:
    using Error::Error;
};

class DivergenceError : public Error {
public:
    using Error::Error;
};

class InconsistentSystemError : public Error {
public:
    using Error::Error;
};

class ClosureFailure : public Error {
public:
    using Error::Error;
};

/// Malformed user input (bad "P/Q", unknown chart, ...).
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace superint
