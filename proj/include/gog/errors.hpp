#pragma once

#include <stdexcept>
#include <string>

namespace gog {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input. `line` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A word mentions a generator outside the ambient alphabet.
class AlphabetError : public Error {
 public:
  using Error::Error;
};

// An edge group is not contained in one of its vertex groups.
class ContainmentError : public Error {
 public:
  using Error::Error;
};

// An operation was called on an input violating its documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// The input violates a hypothesis the reduction relies on (e.g. a tree
// component of the mid-graph).
class HypothesisError : public Error {
 public:
  using Error::Error;
};

// The brute-force oracle refused to run past its length cap.
class OracleLimitError : public Error {
 public:
  using Error::Error;
};

// A library invariant failed; always a bug or a malformed hand-built object.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace gog
