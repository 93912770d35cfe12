#pragma once

#include <stdexcept>
#include <string>

namespace chaoslab {

/// Base class for every error raised by the library. Each subclass maps onto
/// one stable CLI exit code (see tools/).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter or input lies outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Pearson correlation requested on data with zero variance in a marginal.
class UndefinedCorrelationError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Malformed key, container, PGM file or inconsistent header.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Decryption produced bytes outside the printable range: wrong key or tampering.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

/// An iterative search exceeded its iteration cap.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// The system randomness source failed.
class EntropyError : public Error {
 public:
  using Error::Error;
};

}  // namespace chaoslab
