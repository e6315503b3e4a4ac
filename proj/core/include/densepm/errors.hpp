#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace densepm {

/// Bad input: violated precondition, malformed graph, wrong parity.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Graph text that does not conform to the file format.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An exponential-time kernel was asked for an instance above its cap.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact elimination hit a zero determinant.
class SingularSystemError : public std::runtime_error {
 public:
  SingularSystemError() : std::runtime_error("singular system") {}
};

/// Oracle counts that no genuine graph could have produced: the exact solution
/// is fractional or negative at `index`.
class OracleInconsistencyError : public std::runtime_error {
 public:
  OracleInconsistencyError(std::size_t index, const std::string& detail)
      : std::runtime_error("oracle inconsistency at index " + std::to_string(index) + ": " + detail),
        index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

}  // namespace densepm
