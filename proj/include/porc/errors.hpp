#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace porc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates an operation's precondition (zero polynomial, q <= 1, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed DSL or polynomial text. Positions are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        message_(msg),
        line_(line),
        column_(column) {}

  /// The message without the position prefix.
  const std::string& message() const noexcept { return message_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

/// JSON input that does not follow the documented schema.
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// A configured enumeration or subset cap would be exceeded.
class ScaleError : public Error {
 public:
  using Error::Error;
};

/// An internal cross-check failed; indicates a bug, not bad input.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace porc
