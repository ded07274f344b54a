#pragma once

#include <stdexcept>
#include <string>

namespace memnet {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A referenced node, label, or record does not exist.
class NotFoundError : public Error {
public:
    using Error::Error;
};

/// An index, window, or numeric argument is out of its valid range.
class RangeError : public Error {
public:
    using Error::Error;
};

/// Reading or writing a stream/file failed.
class IoError : public Error {
public:
    using Error::Error;
};

/// Input bytes do not match the expected file format.
class FormatError : public Error {
public:
    using Error::Error;
};

/// Matrix/pattern dimensions do not line up.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// An operation that needs at least one element received none.
class EmptyInputError : public Error {
public:
    using Error::Error;
};

/// Invalid configuration values.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Not enough samples to produce a meaningful estimate.
class InsufficientDataError : public Error {
public:
    using Error::Error;
};

/// The requested quantity is mathematically undefined for this input
/// (zero total edge weight, zero reference activations, ...).
class UndefinedValueError : public Error {
public:
    using Error::Error;
};

} // namespace memnet
