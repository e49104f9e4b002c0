#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gmi {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live in different polynomial rings.
class RingMismatch : public Error {
public:
    using Error::Error;
};

/// A precondition on an argument (shape, range, disjointness) was violated.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// The graph class is not supported by the requested operation.
class UnsupportedGraph : public Error {
public:
    using Error::Error;
};

/// A directed cycle was found where acyclicity is required.
class CycleError : public UnsupportedGraph {
public:
    using UnsupportedGraph::UnsupportedGraph;
};

/// A configurable cap (basis size, term count, time, enumeration size) was hit.
class ResourceLimitExceeded : public Error {
public:
    using Error::Error;
};

/// Malformed text input. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : Error(format(message, line, column)), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    static std::string format(const std::string& message, std::size_t line, std::size_t column) {
        if (line == 0) return message;
        return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
    }

    std::size_t line_;
    std::size_t column_;
};

}  // namespace gmi
