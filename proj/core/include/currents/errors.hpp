#pragma once

#include <stdexcept>
#include <string>

namespace currents {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct UnsupportedTypeError : Error {
  explicit UnsupportedTypeError(const std::string& what) : Error(what) {}
};

struct DimensionMismatchError : Error {
  explicit DimensionMismatchError(const std::string& what) : Error(what) {}
};

// Raised by filtered computations whose answer did not stabilize under the
// configured degree cap.  Never a silent wrong answer.
struct InconclusiveAtCapError : Error {
  InconclusiveAtCapError(const std::string& what, int cap_used)
      : Error(what), cap(cap_used) {}
  int cap;
};

}  // namespace currents
