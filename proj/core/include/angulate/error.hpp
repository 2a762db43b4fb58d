#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace angulate {

// Base for every error raised by the library. Subclasses name the failure
// class so callers (notably the CLI) can map them to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad argument: out-of-range index, p < 2, mismatched sizes, ...
class ParameterError : public Error {
 public:
  using Error::Error;
};

// A mobile or map that breaks one of its structural invariants.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Sequence data that cannot be decoded; carries the first offending index.
class DecodeError : public Error {
 public:
  DecodeError(const std::string& what, std::size_t index)
      : Error(what + " (at index " + std::to_string(index) + ")"), index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

// A request that would exceed a work budget (enumeration size guard,
// rejection attempts, APSP grid size).
class BudgetError : public Error {
 public:
  using Error::Error;
};

// Inconsistent combinatorial structure, e.g. a rotation system that is not
// a permutation of the half-edges.
class StructureError : public Error {
 public:
  using Error::Error;
};

// Regression on degenerate data.
class FitError : public Error {
 public:
  using Error::Error;
};

// Malformed text input (PMOBILE / PMAP / config files).
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace angulate
