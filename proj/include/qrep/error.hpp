#pragma once

#include <stdexcept>
#include <string>

namespace qrep {

// Base of everything the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operand shapes, vertex indices or fields do not fit together.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// A documented precondition of an operation does not hold for the input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Two independent computations of the same quantity disagree. Always a bug.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

// Exhaustive search would exceed the configured budget; the answer is undecided.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

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

}  // namespace qrep
