#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace idem {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands of incompatible dimension or coordinate labels.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(decorate(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string decorate(const std::string& what, std::size_t line, std::size_t column) {
    if (line == 0) return what;
    std::string out = "line " + std::to_string(line);
    if (column != 0) out += ", column " + std::to_string(column);
    return out + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

/// A precondition on the mathematical content of an argument failed
/// (non-invertible scalar, equal points, inconsistent prescription, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Input relation is not a partial order, or an unknown element was named.
class OrderError : public Error {
 public:
  using Error::Error;
};

}  // namespace idem
