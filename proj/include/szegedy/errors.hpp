#pragma once

#include <stdexcept>
#include <string>

namespace szegedy {

/// Raised when a caller-supplied value violates an operation's precondition.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& message)
      : std::invalid_argument(message) {}
};

/// Raised when a synthesizer's numeric preconditions (transform or
/// preparation fidelity) do not hold.
class SynthesisError : public InvalidInput {
 public:
  explicit SynthesisError(const std::string& message) : InvalidInput(message) {}
};

/// Raised when an evolved state leaves the valid (embedded) subspace.
class LeakageError : public std::runtime_error {
 public:
  explicit LeakageError(const std::string& message)
      : std::runtime_error(message) {}
};

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace szegedy
