#pragma once

#include <string>
#include <vector>

#include "whirl/orbit.hpp"
#include "whirl/whorm.hpp"

namespace whirl {

// Aligned text grid, one row per state, columns in the poset's display
// order. With a whorm decomposition, each cell gets a per-whorm glyph
// suffix (a, b, c, ...) and, when color is on, an ANSI color per whorm.
std::string render_board(const OrbitBoard& board, const std::vector<Whorm>* whorms = nullptr,
                         bool color = false);

}  // namespace whirl
