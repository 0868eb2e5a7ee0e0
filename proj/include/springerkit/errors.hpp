#pragma once

#include <stdexcept>
#include <string>

namespace springerkit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input value (not a partition, not a tableau, bad matrix shape).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ConcatenationOrderError : public Error {
 public:
  using Error::Error;
};

class ParityError : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

class AdmissibilityError : public Error {
 public:
  using Error::Error;
};

class NilpotencyError : public Error {
 public:
  using Error::Error;
};

class ModelError : public Error {
 public:
  using Error::Error;
};

class SubspaceError : public Error {
 public:
  using Error::Error;
};

/// Enumeration request exceeds the combinatorial guard.
class ScaleError : public Error {
 public:
  using Error::Error;
};

/// Consecutive subquotient shapes of a flag do not differ by a domino.
class NotDominoError : public Error {
 public:
  using Error::Error;
};

/// Point does not lie on the variety cut out by the equations.
class DomainError : public Error {
 public:
  using Error::Error;
};

class LabelError : public Error {
 public:
  using Error::Error;
};

/// A mathematical invariant that must always hold was violated. Seeing one
/// of these means a bug (or a counterexample), never bad user input.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace springerkit
