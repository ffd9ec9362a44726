#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncps {

/// Byte range [begin, end) into the source an AST node was parsed from.
struct SourceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// Exact division is only defined for single-term scalar divisors.
class NotMonomialDivisor : public Error {
 public:
  using Error::Error;
};

/// The classical limit of a term carrying hbar^{-k} is undefined.
class NegativeHbarPower : public Error {
 public:
  using Error::Error;
};

/// Poisson brackets require hbar-free (classical) inputs.
class NotClassical : public Error {
 public:
  using Error::Error;
};

class BadDimension : public Error {
 public:
  using Error::Error;
};

class MissingParam : public Error {
 public:
  using Error::Error;
};

/// Trusted block of the truncated representation would be empty.
class DegreeTooHigh : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column,
             std::vector<std::string> expected = {})
      : Error("parse error at line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + message +
              (expected.empty() ? "" : " (expected " + join(expected) + ")")),
        line_(line),
        column_(column),
        expected_(std::move(expected)) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  static std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i > 0) out += i + 1 == parts.size() ? " or " : ", ";
      out += parts[i];
    }
    return out;
  }

  std::size_t line_;
  std::size_t column_;
  std::vector<std::string> expected_;
};

/// A parameter was named x, p, i, t, or a wrong-case spelling of hbar.
class ReservedName : public ParseError {
 public:
  using ParseError::ParseError;
};

}  // namespace ncps
