#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wdg {

// Root of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unknown node or edge, self-loop, duplicate edge, edge outside a bipartition.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// A weight would leave [1, W].
class RangeError : public Error {
 public:
  using Error::Error;
};

class ArgumentError : public Error {
 public:
  using Error::Error;
};

// Text input could not be read; carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Well-formed input that breaks a model invariant (e.g. a trace over its bound).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Exhaustive solver refused an instance that is too large.
class SizeGuardError : public Error {
 public:
  using Error::Error;
};

// No feasible answer exists (disconnected graph for MST, isolated task, ...).
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// Operation is illegal in the current state (double add, missing remove).
class StateError : public Error {
 public:
  using Error::Error;
};

// An internal invariant failed. Indicates a bug, never bad input.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace wdg
