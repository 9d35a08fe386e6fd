#pragma once

#include <stdexcept>
#include <string>

namespace nfree {

// Base class for everything thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The input relation is not a strict order: its transitive closure contains
// (x, x), or both (x, y) and (y, x).
class CycleError : public Error {
 public:
  using Error::Error;
};

// An operation referenced a vertex that is not in the poset.
class UnknownElementError : public Error {
 public:
  using Error::Error;
};

// The same element was declared twice.
class DuplicateElementError : public Error {
 public:
  using Error::Error;
};

// A label violates the vertex naming rules.
class InvalidLabelError : public Error {
 public:
  using Error::Error;
};

// An edge passed to subdivide is not a covering pair of the poset.
class NotACoverEdgeError : public Error {
 public:
  using Error::Error;
};

// A scripted strategy named an edge that is not a diagonal edge at the step
// it is consumed, ran out of edges, or left edges unconsumed.
class InvalidScriptError : public Error {
 public:
  using Error::Error;
};

// An exhaustive search was requested beyond its configured bound.
class BoundExceededError : public Error {
 public:
  using Error::Error;
};

// The minimality search found something that contradicts the expected
// structure: a bug, or a falsified theorem instance.
class MinimalityViolationError : public Error {
 public:
  using Error::Error;
};

// An internal consistency guard fired.
class InternalError : public Error {
 public:
  using Error::Error;
};

// Text input could not be parsed; carries a 1-based position.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error(message + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace nfree
