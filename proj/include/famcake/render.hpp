#pragma once

#include "famcake/allocation.hpp"
#include "famcake/instance.hpp"

#include <string>

namespace famcake {

// One line per family: its intervals and each member's value of the family
// piece. Byte-stable for fixed inputs.
std::string render_text(const Instance& inst, const Allocation& x);

// Horizontal bar (SVG 1.1) with one color per family and cut positions
// labeled as rationals. Coordinates are computed in integer thousandths, so
// output is byte-stable.
std::string render_svg(const Instance& inst, const Allocation& x);

} // namespace famcake
