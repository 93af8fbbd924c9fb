#ifndef MINE_ERROR_HPP
#define MINE_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mine {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Checked 64-bit arithmetic left the representable range.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// An operation was called outside its precondition (wrong arity, +inf where
/// finite tables are required, non-submodular input, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A labeling, trace or solution does not match the instance it is used with.
class MismatchError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// A drawing violates general position (collinear overlap, node on an edge,
/// concurrent crossings).
class GeneralPositionError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// A configured enumeration or width bound was exceeded.
class BoundExceededError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// Syntax or semantic error while reading one of the text formats.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace mine

#endif // MINE_ERROR_HPP
