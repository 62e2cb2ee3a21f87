#pragma once

#include <stdexcept>
#include <string>

namespace cviso {

// Invalid parameter values (negative squeezing, p outside [0,1], alpha <= 0).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Matrix of the wrong size or parity.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Matrix does not have the required sparsity or symmetry pattern.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A numerical routine could not produce a trustworthy result
// (singular solve, disagreeing cross-checks, unphysical output).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Fock cutoff too small for the requested truncation tail bound.
class TailError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// Fock coefficients failed to reproduce the coherent-state matrix elements.
class ExtractionError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// Operator does not represent a normalized state.
class StateError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace cviso
