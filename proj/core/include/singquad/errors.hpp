#pragma once

#include <stdexcept>
#include <string>

namespace singquad {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// The singularity abscissa is too close to a grid node to decide which
/// side the nodal sample belongs to.
class NodeCollisionError : public Error {
 public:
  using Error::Error;
};

/// The interval count is not divisible by the rule's panel size.
class PanelMismatchError : public Error {
 public:
  using Error::Error;
};

/// A point lies outside the grid (or a panel).
class OutOfRangeError : public Error {
 public:
  using Error::Error;
};

/// Fewer jump values supplied than the rule degree requires.
class MissingJumpsError : public Error {
 public:
  using Error::Error;
};

/// Rule degree outside the supported {1, 2, 3, 4}.
class UnsupportedDegreeError : public Error {
 public:
  using Error::Error;
};

/// Two singularities fall inside the same panel.
class TwoSingularitiesError : public Error {
 public:
  using Error::Error;
};

/// The adaptive reference integrator exhausted its subdivision budget
/// without certifying the requested tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Malformed argument (non-finite value, bad length, ...).
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

}  // namespace singquad
