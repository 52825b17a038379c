#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace metafix {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different ambient ranks / ring dimensions.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain (non-IA map, zero divisor, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A mathematical identity that must hold by construction failed.
/// Always indicates a bug, never bad input.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input. `line` is 0 when the input has no line structure.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t column, std::size_t line = 0)
      : Error(format(msg, column, line)), message_(msg), column_(column), line_(line) {}

  /// The message without the position prefix.
  const std::string& message() const { return message_; }

  std::size_t column() const { return column_; }
  std::size_t line() const { return line_; }

 private:
  static std::string format(const std::string& msg, std::size_t column,
                            std::size_t line) {
    std::string where = line ? "line " + std::to_string(line) + ", column " +
                                   std::to_string(column)
                             : "column " + std::to_string(column);
    return where + ": " + msg;
  }

  std::string message_;
  std::size_t column_;
  std::size_t line_;
};

}  // namespace metafix
