#pragma once

#include <stdexcept>
#include <string>

namespace superfs {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed user input: files, flags, dimensions. Maps to CLI exit code 2.
class InputError : public Error {
public:
    using Error::Error;
};

class GroupError : public InputError {
public:
    using InputError::InputError;
};

class TwistError : public InputError {
public:
    using InputError::InputError;
};

class SurfaceError : public InputError {
public:
    using InputError::InputError;
};

/// Enumeration would exceed the configured relator-check budget.
class BudgetError : public InputError {
public:
    BudgetError(const std::string& what, unsigned long long required)
        : InputError(what), required_(required) {}
    unsigned long long required() const noexcept { return required_; }

private:
    unsigned long long required_;
};

/// Numerical failure inside a decomposition or solve.
class NumericalError : public Error {
public:
    using Error::Error;
};

/// A computed quantity is not within tolerance of the discrete set it must lie in.
class SnapError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

} // namespace superfs
