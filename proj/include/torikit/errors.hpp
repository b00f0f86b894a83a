#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace torikit {

// Vector or matrix shapes that do not fit together.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A mathematical precondition of an operation is not met by its input
// (fan not smooth, not complete, cone without vertex, ...).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed fan file. Line and column are 1-based; column 0 means "whole line".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error(format(line, column, what)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(std::size_t line, std::size_t column, const std::string& what) {
    std::string s = "line " + std::to_string(line);
    if (column != 0) s += ", column " + std::to_string(column);
    return s + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace torikit
