#pragma once

#include <stdexcept>
#include <string>

namespace lipscomb {

// Malformed input: unknown symbols, bad literals, alphabet mismatches.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured size guard (point cap, level cap, lattice range) was hit.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A certificate that must hold by construction did not.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace lipscomb
