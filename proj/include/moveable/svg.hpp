#pragma once

#include <string>
#include <vector>

#include "moveable/mover.hpp"
#include "moveable/render.hpp"
#include "moveable/scene.hpp"

namespace moveable {

// Object bodies, back to front (lowest priority first).
std::vector<RenderPrimitive> shape_primitives(const Mover& mover);

// One SVG document: a background, the shapes layer and, when requested, the
// contour layer on top. Output depends only on the input, byte for byte.
std::string emit_svg(const Mover& mover, bool show_contours);
std::string emit_svg(const Scene& scene, bool show_contours);

}  // namespace moveable
