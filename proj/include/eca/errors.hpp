#pragma once

#include <stdexcept>
#include <string>

namespace eca {

// Raised when a desk-scale size guard would be exceeded (table too large,
// enumeration too long, ...). Distinct from invalid input.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace eca
