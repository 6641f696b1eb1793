#pragma once

#include <stdexcept>
#include <string>

namespace mackey {

/// Malformed or inconsistent input data (bad permutation, non-equivariant map, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configurable resource guard was hit. `cap()` names the guard.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(std::string cap, const std::string& what)
      : std::runtime_error(what), cap_(std::move(cap)) {}
  const std::string& cap() const noexcept { return cap_; }

 private:
  std::string cap_;
};

/// Integer arithmetic left the int64 range.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

}  // namespace mackey
