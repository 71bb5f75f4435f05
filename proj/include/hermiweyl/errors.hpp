#pragma once

#include <stdexcept>
#include <string>

namespace hermiweyl {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A polynomial order exceeded the configured maximum.
class OrderOverflowError : public Error {
 public:
  using Error::Error;
};

/// A Gaussian integral was requested outside its convergence domain.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

/// A square-root branch could not be chosen unambiguously.
class BranchError : public Error {
 public:
  using Error::Error;
};

/// Fock-space truncation corrupted a result beyond tolerance.
class TruncationError : public Error {
 public:
  using Error::Error;
};

/// Invalid physical parameters (e.g. a violated symplectic constraint).
class ParameterError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Two quadrature routes that should agree did not.
class QuadratureError : public Error {
 public:
  using Error::Error;
};

}  // namespace hermiweyl
