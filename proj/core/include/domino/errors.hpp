#pragma once

#include <stdexcept>
#include <string>

namespace domino {

/// A malformed arrival sequence or instance file.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An operation was called on input that violates its stated preconditions.
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A step policy returned a selection that is impossible at the current step
/// (e.g. a vertex that has not arrived yet).
struct ContractViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A step policy left the maintained solution infeasible for the current
/// prefix graph. Carries the offending step.
struct FeasibilityViolation : std::runtime_error {
  explicit FeasibilityViolation(int step, const std::string& what)
      : std::runtime_error(what), step(step) {}
  int step;
};

/// An exact solve was refused because the instance exceeds the configured cap.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A bad experiment configuration (unknown key, unparsable value, ...).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace domino
