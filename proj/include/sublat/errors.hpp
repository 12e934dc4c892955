#pragma once

#include <stdexcept>

namespace sublat {

/// Malformed matrix text / JSON input.
struct parse_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Input rows are linearly dependent (not a rank-n sublattice basis).
struct singular_matrix_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// An enumeration request would exceed the configured matrix cap.
struct cap_exceeded_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace sublat
