#pragma once

#include <stdexcept>

namespace kolchin {

// Refusal to start a computation whose cost exceeds a configured limit
// (enumeration budget, subset expansion size). Raising the limit is the
// caller's call; nothing has been computed when this is thrown.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A redundant internal check failed: interpolation did not match the
// counting function on held-out points, or two algorithms disagreed.
// Indicates a bug or a violated stabilization bound, never bad input.
class CrossCheckError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kolchin
