#ifndef EQFIX_ERRORS_HPP
#define EQFIX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace eqfix {

// Base of everything thrown on purpose by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-contract input (bad permutation images, degree
// mismatches, order cap exceeded, unparseable scenes). CLI exit code 2.
struct InputError : Error {
  using Error::Error;
};

// Well-formed input that violates a mathematical precondition (singular map,
// non-equivariant matrix, mark vector outside the image of the marks map).
// CLI exit code 3.
struct PreconditionError : Error {
  using Error::Error;
};

struct DegreeMismatchError : InputError {
  using InputError::InputError;
};

struct OrderCapError : InputError {
  using InputError::InputError;
};

struct GroupMismatchError : InputError {
  using InputError::InputError;
};

struct SceneError : InputError {
  using InputError::InputError;
};

struct NotInImageError : PreconditionError {
  using PreconditionError::PreconditionError;
};

struct SingularMapError : PreconditionError {
  using PreconditionError::PreconditionError;
};

struct SingularImageError : PreconditionError {
  using PreconditionError::PreconditionError;
};

struct InconsistentImagesError : PreconditionError {
  using PreconditionError::PreconditionError;
};

struct EquivarianceError : PreconditionError {
  using PreconditionError::PreconditionError;
};

struct ChainMapViolationError : PreconditionError {
  using PreconditionError::PreconditionError;
};

}  // namespace eqfix

#endif
