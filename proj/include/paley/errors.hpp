#pragma once

#include <stdexcept>

namespace paley {

/// A request that is valid but larger than the configured resource cap.
/// Caps are refusals: nothing is truncated.
class ResourceCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace paley
