#pragma once

#include <stdexcept>
#include <string>

namespace dmtrack {

// Shapes do not line up for an operation.
struct ShapeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid static configuration (kernel sizes, expert counts, key names, ...).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Runtime data failed validation (rows not normalized, out-of-range ids, ...).
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// NaN/Inf reached a computation that must stay finite.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Checkpoint failures, one type per documented failure class.
struct CheckpointFormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CheckpointVersionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CheckpointIntegrityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace dmtrack
