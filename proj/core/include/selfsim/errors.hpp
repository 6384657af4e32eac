#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace selfsim {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument is outside the domain of an operation (letter out of range,
/// zero power, unsupported format, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed or invalid recursion text. Positions are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A configured size guard (vertex cap, dense solver limit) was exceeded.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

class NotFoundError : public Error {
 public:
  using Error::Error;
};

/// Raised when an operation needs a certified nucleus but only a
/// bound-exceeded verdict is available.
class NucleusUnavailableError : public Error {
 public:
  using Error::Error;
};

}  // namespace selfsim
