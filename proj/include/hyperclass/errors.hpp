#pragma once

#include <stdexcept>
#include <string>

namespace hyperclass {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or inconsistent input (dimension mismatch, bad rational, arity).
class InputError : public Error {
public:
    explicit InputError(const std::string& what) : Error(what) {}
};

/// The integer span of the given points is not the full lattice.
class SpanError : public Error {
public:
    explicit SpanError(const std::string& what) : Error(what) {}
};

/// No linear form takes the value 1 on every generator.
class GradingFormError : public Error {
public:
    explicit GradingFormError(const std::string& what) : Error(what) {}
};

/// The generators do not span a pointed full-dimensional cone.
class ConeError : public Error {
public:
    explicit ConeError(const std::string& what) : Error(what) {}
};

/// An operation that requires a non-resonant parameter vector got a resonant one.
class ResonanceError : public Error {
public:
    explicit ResonanceError(const std::string& what) : Error(what) {}
};

/// Unknown family name, unsupported arity, or missing per-family rule.
class UnsupportedError : public Error {
public:
    explicit UnsupportedError(const std::string& what) : Error(what) {}
};

} // namespace hyperclass
