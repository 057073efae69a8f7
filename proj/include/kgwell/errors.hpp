#pragma once

#include <stdexcept>

namespace kgwell {

/// Argument outside the documented domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Point on or outside the forward lightcone of the shifted tip.
class LightconeError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Evaluation at a pole (log-gamma at nonpositive integers).
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Two fields that must share a grid (or frame, or time stamp) do not.
class GridMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Normalization of a mode with (numerically) vanishing KG flux.
class DegenerateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CflError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Initial data incompatible with the solver (wrong grid, non-Dirichlet).
class InitialDataError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by the solvers when the KG norm grows past the configured bound.
class InstabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OverlapError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace kgwell
