#ifndef HOMLIE_ERRORS_HPP
#define HOMLIE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace homlie {

/// Malformed input data (bad rational string, unknown basis label, ...).
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A documented precondition of an operation was violated by the caller.
struct PreconditionError : std::invalid_argument {
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

/// Dimension mismatch between operands.
struct DimensionError : PreconditionError {
  explicit DimensionError(const std::string& what) : PreconditionError(what) {}
};

/// A degenerate bilinear form was used where invertibility is required.
struct SingularFormError : std::runtime_error {
  explicit SingularFormError(const std::string& what) : std::runtime_error(what) {}
};

/// Input data failed a mathematical validity check (not a Lie algebra,
/// not a cocycle, metric not invariant, ...). Carries the anchor of the
/// falsified identity.
struct ValidationError : std::runtime_error {
  std::string anchor;
  ValidationError(std::string anchor_, const std::string& what)
      : std::runtime_error(what), anchor(std::move(anchor_)) {}
};

/// An identity guaranteed by a proven theorem failed on validated input.
/// Always indicates a bug, never a property of the data.
struct MathInconsistencyError : std::logic_error {
  explicit MathInconsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace homlie

#endif
