#pragma once

#include <stdexcept>
#include <string>

namespace cwb {

// Input violates a mathematical precondition (gcd(n,q) != 1, non-unit multiplier, ...).
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

// A configured size limit would be exceeded.
class CapExceeded : public std::length_error {
 public:
  explicit CapExceeded(const std::string& what) : std::length_error(what) {}
};

// An internal consistency check failed. Never expected on valid input.
class BugTrap : public std::logic_error {
 public:
  explicit BugTrap(const std::string& what) : std::logic_error(what) {}
};

}  // namespace cwb
