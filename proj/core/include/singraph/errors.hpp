#pragma once

#include <stdexcept>

namespace singraph {

// Base type for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Inversion of a zero divisor / zero.
class NonUnitError : public Error {
 public:
  using Error::Error;
};

// Operation needs a field but got Z/p^n with n > 1.
class NotAFieldError : public Error {
 public:
  using Error::Error;
};

// Enumeration, materialization or solver size cap exceeded.
class CapExceededError : public Error {
 public:
  using Error::Error;
};

// Element is outside the domain of a classification (e.g. trace != -2).
class NotInSetError : public Error {
 public:
  using Error::Error;
};

class AsymmetricSetError : public Error {
 public:
  using Error::Error;
};

class IdentityInSetError : public Error {
 public:
  using Error::Error;
};

class UnknownVertexError : public Error {
 public:
  using Error::Error;
};

// Base coloring of a quotient graph failed verification.
class ImproperBaseError : public Error {
 public:
  using Error::Error;
};

class EmptyGraphError : public Error {
 public:
  using Error::Error;
};

class DisconnectedError : public Error {
 public:
  using Error::Error;
};

class IncompleteColoringError : public Error {
 public:
  using Error::Error;
};

// A hypothesis of the requested construction does not hold (e.g. -1 is a
// square, so the quadratic-residue coset coloring does not apply).
class PreconditionFailedError : public Error {
 public:
  using Error::Error;
};

class BadModulusError : public Error {
 public:
  using Error::Error;
};

class NoConvergenceError : public Error {
 public:
  using Error::Error;
};

class BadArgumentError : public Error {
 public:
  using Error::Error;
};

}  // namespace singraph
