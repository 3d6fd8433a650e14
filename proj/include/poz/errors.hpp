#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace poz {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Degree/order queries on the zero polynomial.
class ZeroPolynomialError : public Error {
public:
  explicit ZeroPolynomialError(const std::string& op)
      : Error(op + ": undefined on zero polynomial") {}
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// A fusion step has no derived polynomial (the prederived polynomial does
/// not factor as R(xi) * Pder).
class InseparableError : public Error {
public:
  InseparableError(std::size_t step, const std::string& what)
      : Error("inseparable at step " + std::to_string(step) + ": " + what), step_(step) {}
  std::size_t step() const { return step_; }

private:
  std::size_t step_;
};

/// Syntax error in polynomial text, with 1-based line and column.
class ParseError : public Error {
public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

} // namespace poz
