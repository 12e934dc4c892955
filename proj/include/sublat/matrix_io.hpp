#pragma once

#include <string>

#include "sublat/errors.hpp"
#include "sublat/matrix.hpp"

namespace sublat {

/// Parses the shared matrix format: rows separated by ';', entries by ','
/// (e.g. "2,0;1,2"), or a JSON array of arrays of integers (big entries may
/// be quoted as decimal strings). Ragged rows are rejected. Throws
/// parse_error on malformed input.
IntMatrix parse_matrix(const std::string& text);

/// Renders in the text format; parse_matrix(render_matrix(m)) == m.
std::string render_matrix(const IntMatrix& m);

}  // namespace sublat
