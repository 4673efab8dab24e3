#pragma once

#include <stdexcept>
#include <string>

namespace gmf {

// Raised for malformed or inconsistent caller input. The CLI maps it to exit 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DegreeMismatch : public InputError {
 public:
  DegreeMismatch(int expected, int actual)
      : InputError("degree mismatch: expected " + std::to_string(expected) +
                   ", got " + std::to_string(actual)) {}
};

class CapExceeded : public InputError {
 public:
  CapExceeded(int n, int cap)
      : InputError("degree " + std::to_string(n) +
                   " exceeds enumeration cap " + std::to_string(cap)) {}
};

inline void require_same_degree(int expected, int actual) {
  if (expected != actual) throw DegreeMismatch(expected, actual);
}

}  // namespace gmf
