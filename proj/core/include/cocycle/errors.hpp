#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cocycle {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inversion of a zero divisor or a non-unit (names the obstruction).
class NotInvertible : public Error {
 public:
  using Error::Error;
};

/// Operands live in different rings of the tower and no promotion was requested.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// Field-only linear algebra was requested over a ring that is not a field.
class NotAField : public Error {
 public:
  using Error::Error;
};

/// Incompatible arities, dimensions or matrix sizes.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A value could not be demoted into a smaller ring of the tower.
class DemotionError : public Error {
 public:
  using Error::Error;
};

/// Text did not conform to one of the input grammars.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    return "parse error at " + std::to_string(line) + ":" + std::to_string(column) + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

/// A precondition stated as a mathematical hypothesis does not hold.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

}  // namespace cocycle
