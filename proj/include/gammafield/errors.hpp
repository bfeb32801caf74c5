#pragma once

#include <stdexcept>
#include <string>

namespace gammafield {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Zero or constant input where a nontrivial object is required.
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

/// Modulus is composite, or 2 where an odd prime is required.
class InvalidPrimeError : public Error {
 public:
  using Error::Error;
};

class RankError : public Error {
 public:
  using Error::Error;
};

/// Caller violated a documented precondition (e.g. non-squarefree input to Sturm).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

class SingularFormError : public Error {
 public:
  using Error::Error;
};

class WildRamificationError : public Error {
 public:
  using Error::Error;
};

/// Internal consistency failure, e.g. a non-integral trace. Signals a bug.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Polynomial is not a valid field-defining input (non-monic or reducible).
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace gammafield
