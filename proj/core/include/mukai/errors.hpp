#pragma once

#include <stdexcept>

namespace mukai {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: dimension mismatch, non-symmetric Gram, bad parameter.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A mathematical precondition of an operation does not hold
/// (e.g. a twist requested along a class whose square is not -2).
class PreconditionError : public InputError {
 public:
  using InputError::InputError;
};

/// A computed object violates an invariant it is required to satisfy
/// (non-invariant sublattice, non-isometric matrix).
class InvarianceError : public Error {
 public:
  using Error::Error;
};

class CertificationError : public Error {
 public:
  using Error::Error;
};

class SearchExhaustedError : public Error {
 public:
  using Error::Error;
};

}  // namespace mukai
