#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qcent {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a computation would exceed a configured order bound.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// Raised on invalid arguments: bad dimensions, unsupported descriptors,
/// maps that are not homomorphisms and the like.
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        message_(message) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

}  // namespace qcent
