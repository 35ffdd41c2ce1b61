#ifndef CUBECRYS_ERROR_HPP
#define CUBECRYS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cubecrys {

/// Base of every error raised by the library. Errors deriving from
/// InputError describe bad caller data; InternalError means a self-check
/// that should never fire did.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class InputError : public Error {
public:
  using Error::Error;
};

class InternalError : public Error {
public:
  using Error::Error;
};

class DimensionError : public InputError {
public:
  using InputError::InputError;
};

class SingularMatrixError : public InputError {
public:
  using InputError::InputError;
};

class SizeError : public InputError {
public:
  using InputError::InputError;
};

class ParseError : public InputError {
public:
  using InputError::InputError;
};

class RelabelError : public InputError {
public:
  using InputError::InputError;
};

// Crystallographic data.
class StructureError : public InputError {
public:
  using InputError::InputError;
};

class LatticeInvarianceError : public InputError {
public:
  using InputError::InputError;
};

class BasisError : public InputError {
public:
  using InputError::InputError;
};

class ExtensionError : public InputError {
public:
  using InputError::InputError;
};

class CatalogIntegrityError : public InternalError {
public:
  using InternalError::InternalError;
};

// Walls and cube complexes.
class RankError : public InputError {
public:
  using InputError::InputError;
};

class MembershipError : public InputError {
public:
  using InputError::InputError;
};

class CrossingConditionError : public InputError {
public:
  using InputError::InputError;
};

class PropertyViolationError : public InternalError {
public:
  using InternalError::InternalError;
};

class WitnessCorruptionError : public InternalError {
public:
  using InternalError::InternalError;
};

} // namespace cubecrys

#endif
