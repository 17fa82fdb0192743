#pragma once

#include <stdexcept>
#include <string>

namespace msa {

/// Thrown when an argument violates an operation's precondition.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// Thrown when a solver declines an instance that is outside its guard
/// (too many terminals, residual too large, ...). Not a bug in the input.
class Refused : public std::runtime_error {
 public:
  explicit Refused(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace msa
