#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace parklot {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A graph that violates a structural requirement (cycle, bad root, ...).
class GraphError : public Error {
 public:
  using Error::Error;
};

/// Arguments outside an operation's domain.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed text input; `line()` is 1-based, 0 when not line oriented.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// The enumeration would visit more sequences than the configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace parklot
