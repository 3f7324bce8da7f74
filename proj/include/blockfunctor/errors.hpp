#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace blockfunctor {

// Base for every error raised by the engine. The CLI maps each subclass to a
// distinct exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed command line.
class UsageError : public Error {
 public:
  using Error::Error;
};

// Malformed group-description text. Carries the 1-based position.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// The input is well-formed but violates a mathematical precondition
// (non-normal Sylow subgroup, non-free action, size bound, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// An input group exceeds the desk-scale bound.
class SizeBoundError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A computed object failed a consistency check that the theory guarantees.
// Seeing one of these means a bug or a counterexample.
class InternalError : public Error {
 public:
  using Error::Error;
};

class TheoremViolation : public InternalError {
 public:
  using InternalError::InternalError;
};

}  // namespace blockfunctor
