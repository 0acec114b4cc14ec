#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace fhaar {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Expression text could not be parsed. `position` is a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Domain fault while evaluating an expression or right-hand side.
class EvalError : public Error {
 public:
  using Error::Error;
};

/// A problem description violates one or more constraints.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> problems)
      : Error(join(problems)), problems_(std::move(problems)) {}

  const std::vector<std::string>& problems() const noexcept { return problems_; }

 private:
  static std::string join(const std::vector<std::string>& items) {
    std::string out = "invalid problem:";
    for (const auto& s : items) out += "\n  - " + s;
    return out;
  }

  std::vector<std::string> problems_;
};

/// LU factorization met a pivot that is zero to working precision.
class SingularMatrixError : public Error {
 public:
  explicit SingularMatrixError(long column)
      : Error("matrix is singular to working precision (pivot column " +
              std::to_string(column) + ")"),
        column_(column) {}

  long column() const noexcept { return column_; }

 private:
  long column_;
};

/// Malformed or unreadable configuration / data file.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace fhaar
