#pragma once

#include <stdexcept>

namespace olo {

// Filesystem-level failures (missing or unwritable files). Kept distinct
// from std::runtime_error so callers can map them to their own exit path.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace olo
