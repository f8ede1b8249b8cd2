#pragma once

#include <stdexcept>
#include <string>

namespace sphres {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input outside an operation's domain (bad dimension, non-positive radius, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A numerical procedure failed to reach its certificate.
class NumericError : public Error {
 public:
  using Error::Error;
};

class DegenerateInput : public DomainError {
 public:
  using DomainError::DomainError;
};

class UnsupportedDimension : public DomainError {
 public:
  using DomainError::DomainError;
};

class DegreeTooLarge : public DomainError {
 public:
  using DomainError::DomainError;
};

class NonPositiveInput : public DomainError {
 public:
  using DomainError::DomainError;
};

class InvalidGrid : public DomainError {
 public:
  using DomainError::DomainError;
};

class SingularPoint : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Normal variation takes positive values while the diameter constraint is claimed.
class SignViolation : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The supplied lambda does not make the outgoing state vanish on the unit sphere.
class NotAResonance : public DomainError {
 public:
  using DomainError::DomainError;
};

class NonConvergence : public NumericError {
 public:
  using NumericError::NumericError;
};

class BracketFailure : public NumericError {
 public:
  using NumericError::NumericError;
};

}  // namespace sphres
