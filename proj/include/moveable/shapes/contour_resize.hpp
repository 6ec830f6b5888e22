#pragma once

#include <array>
#include <string_view>

#include "moveable/contour.hpp"

namespace moveable {

// Which directions an eight-handle rectangle may be resized in.
enum class ContourResize { None, NS, WE, Any };

std::string_view to_string(ContourResize r);

struct HandleSpec {
    MovementFreedom freedom;
    CursorHint cursor;
};

// Freedom and cursor for the eight handles of a rectangle, indexed clockwise
// from the left-top corner: LT, T, RT, R, RB, B, LB, L.
std::array<HandleSpec, 8> eight_handle_specs(ContourResize mode);

}  // namespace moveable
