#pragma once

#include <stdexcept>
#include <string>

namespace twoway {

// Malformed or inconsistent input (bad permutation, unparsable value, ...).
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// A configured size or arithmetic guard was exceeded (oracle size limit,
// 64-bit overflow guard on the common denominator).
class GuardExceeded : public std::runtime_error {
 public:
  explicit GuardExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an invariant that the theory guarantees fails to hold.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace twoway
