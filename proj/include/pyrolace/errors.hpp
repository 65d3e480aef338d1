#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pyrolace {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A vertex or hyperedge index outside the valid range.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// Input exceeds VertexSet::kCapacity vertices.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// An operation was called with inputs violating its precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A solver could not produce an answer (non-convergence, size limits).
class SolverError : public Error {
 public:
  using Error::Error;
};

/// Malformed graph or hypergraph text.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace pyrolace
