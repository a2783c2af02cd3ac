#pragma once

#include <stdexcept>
#include <string>

namespace polyinv {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different coefficient domains, or the operation needs a
/// domain the operand does not have (e.g. balanced residues of rationals).
class DomainMismatch : public Error {
 public:
  using Error::Error;
};

/// Variable counts or tuple lengths disagree.
class ArityMismatch : public Error {
 public:
  using Error::Error;
};

/// Division by a non-unit.
class NotInvertibleElement : public Error {
 public:
  using Error::Error;
};

class NotCentered : public Error {
 public:
  using Error::Error;
};

class AdmissibilityError : public Error {
 public:
  using Error::Error;
};

/// The degree filtration needs F = I - H with H free of linear terms.
class LinearPartNotIdentity : public AdmissibilityError {
 public:
  LinearPartNotIdentity(std::string message, std::string matrix)
      : AdmissibilityError(std::move(message)), matrix_(std::move(matrix)) {}
  /// Offending linear part, rendered row by row.
  const std::string& matrix() const noexcept { return matrix_; }

 private:
  std::string matrix_;
};

class LinearPartSingular : public Error {
 public:
  using Error::Error;
};

class CanonicalityViolation : public Error {
 public:
  using Error::Error;
};

class CurveNotCentered : public Error {
 public:
  using Error::Error;
};

/// Internal consistency check failed. Seeing one is a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column,
             std::string expected)
      : Error(format(message, line, column, expected)),
        line_(line),
        column_(column),
        expected_(std::move(expected)) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  static std::string format(const std::string& message, int line, int column,
                            const std::string& expected) {
    std::string out = std::to_string(line) + ":" + std::to_string(column) +
                      ": " + message;
    if (!expected.empty()) out += " (expected " + expected + ")";
    return out;
  }

  int line_;
  int column_;
  std::string expected_;
};

}  // namespace polyinv
