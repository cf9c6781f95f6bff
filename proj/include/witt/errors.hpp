#pragma once

#include <stdexcept>
#include <string>

namespace witt {

/// Malformed input text (space files, manifests, make expressions).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line = 0, int column = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ":" + std::to_string(column) + ": " + what
                                    : what),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Input violates a structural invariant (not a pseudomanifold, bad filtration, ...).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The request is well-formed but outside what the library can compute
/// (general singular strata, resource ceiling).
class OutOfReachError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace witt
