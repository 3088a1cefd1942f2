#pragma once
#include <string>

#include "palf/construct.hpp"

namespace palf {

// Two panels: the deformed 0-handle with handles and notches, and the chord diagram
// of the fiber with vanishing cycles colored (C0 curves in red).
std::string render_svg(const PALF& p);

}  // namespace palf
