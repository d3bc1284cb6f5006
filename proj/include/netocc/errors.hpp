#pragma once

#include <stdexcept>
#include <string>

namespace netocc {

// Base for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad files, malformed input, dimension mismatches.
class IngestError : public Error {
 public:
  using Error::Error;
};

// Violated model preconditions: reducibility, infeasible trichotomy cases,
// singular systems, non-convergence.
class ModelError : public Error {
 public:
  using Error::Error;
};

// Estimation failures: rank deficiency, unidentifiable parameters.
class FitError : public Error {
 public:
  using Error::Error;
};

}  // namespace netocc
