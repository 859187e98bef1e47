#pragma once

#include <stdexcept>
#include <string>

namespace frobstab {

/// Malformed input: parse failures, unknown variables, invalid ring files.
/// The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured resource cap (S-pairs, degree, enumeration size) was hit.
/// Never a wrong answer, only a refusal. Exit code 3.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed: a computed result contradicts a
/// theorem the library relies on. Always an implementation bug. Exit code 4.
class Inconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Polynomials or ideals from different rings were combined.
class ContextMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A precondition of an operation does not hold (e.g. CM not verified).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace frobstab
