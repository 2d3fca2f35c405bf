#pragma once

#include <stdexcept>
#include <string>

namespace defspace {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed .adg or tree document. `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// A graph or tree that violates a structural invariant.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class UnknownVertex : public InvalidInput {
 public:
  explicit UnknownVertex(const std::string& name) : InvalidInput("unknown vertex '" + name + "'") {}
};

/// The input is well formed but outside the domain of the operation
/// (disconnected, not large-type, not reduced, ...).
class ConstraintError : public Error {
 public:
  using Error::Error;
};

class InvalidMove : public Error {
 public:
  using Error::Error;
};

class LimitExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace defspace
