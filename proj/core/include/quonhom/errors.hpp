#pragma once

#include <stdexcept>

namespace quonhom {

// Rejected input values: bad operator labels, non-normalized amplitudes,
// out-of-range parameters, mismatched grid sizes. CLI exit code 2.
class validation_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Requests that exceed hard resource limits (sector sizes, output paths
// that cannot be written). CLI exit code 3.
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Violated internal invariant; indicates a defect, never bad input.
// CLI exit code 1.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace quonhom
