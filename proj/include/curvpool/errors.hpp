#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace curvpool {

// Base of every error raised by the library. The CLI maps subclasses to exit
// codes, so callers that only need a message can catch this.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class IndexOutOfRange : public Error {
public:
  using Error::Error;
};

class SelfLoopRejected : public Error {
public:
  using Error::Error;
};

class EdgeNotPresent : public Error {
public:
  using Error::Error;
};

class InvalidThresholds : public Error {
public:
  using Error::Error;
};

class ShapeMismatch : public Error {
public:
  using Error::Error;
};

class InvalidSpec : public Error {
public:
  using Error::Error;
};

class EmptyInput : public Error {
public:
  using Error::Error;
};

class InvariantViolation : public Error {
public:
  using Error::Error;
};

class IoError : public Error {
public:
  using Error::Error;
};

// Raised by the text readers. line() is 1-based, 0 when the failure is not
// tied to a particular line (e.g. malformed JSON).
class ParseError : public Error {
public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

} // namespace curvpool
