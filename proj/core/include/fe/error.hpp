#pragma once

#include <stdexcept>
#include <string>

namespace fe {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or precondition-violating input (CLI exit code 2).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Operands bound to different symbol tables.
class TableMismatch : public InputError {
 public:
  using InputError::InputError;
};

/// A q-linear table was asked for a product of two non-rational values.
class ModeError : public InputError {
 public:
  using InputError::InputError;
};

/// A sampled function could not be evaluated at a requested point.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

/// A linear system that should be uniquely solvable was singular.
class SingularSystem : public Error {
 public:
  using Error::Error;
};

}  // namespace fe
