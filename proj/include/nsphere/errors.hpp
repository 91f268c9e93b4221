#pragma once

#include <stdexcept>
#include <string>

namespace nsphere {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by exact inversion when the matrix has no inverse.
class SingularMatrix : public Error {
 public:
  using Error::Error;
};

/// The Gram matrix of a pairing category is not invertible for (k, n),
/// so the Weingarten matrix W = G^{-1} does not exist.
class SingularGram : public Error {
 public:
  using Error::Error;
};

/// Bad arguments: out-of-range letters, odd sizes where even is needed,
/// exceeded size caps, parameters outside an evaluator's domain.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class DomainError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class NotPositive : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

}  // namespace nsphere
