#pragma once

#include <stdexcept>
#include <string>

namespace hhv {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands have incompatible dimensions.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// An input contains NaN or Inf entries.
class NotFinite : public Error {
 public:
  using Error::Error;
};

/// An iterative solve failed to reach its convergence target.
class NonConvergence : public Error {
 public:
  using Error::Error;
};

/// A scalar function was evaluated outside its declared domain.
class DomainViolation : public Error {
 public:
  using Error::Error;
};

/// Schatten exponent p < 1 (and not the infinity sentinel).
class BadExponent : public Error {
 public:
  using Error::Error;
};

/// An eigenvalue or scalar argument that must be > 0 is not.
class NotPositive : public Error {
 public:
  using Error::Error;
};

/// A matrix that must be unitary fails the residual test.
class NotUnitary : public Error {
 public:
  using Error::Error;
};

/// An interpolation weight outside [0, 1].
class BadWeight : public Error {
 public:
  using Error::Error;
};

/// A matrix that must be positive definite has lambda_min <= 0.
class NotPositiveDefinite : public Error {
 public:
  using Error::Error;
};

/// Two operands that must commute do not (beyond tolerance).
class NotCommuting : public Error {
 public:
  using Error::Error;
};

/// Quadrature could not be evaluated (bad node count, integrand failure).
class QuadratureFailure : public Error {
 public:
  using Error::Error;
};

/// |X| is numerically singular where a negative power is required.
class SingularX : public Error {
 public:
  using Error::Error;
};

/// Bad configuration (unknown check id, malformed parameter, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// An operand list that must be non-empty is empty.
class EmptyList : public Error {
 public:
  using Error::Error;
};

}  // namespace hhv
