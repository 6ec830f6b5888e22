#pragma once

#include <string>
#include <variant>
#include <vector>

#include "moveable/geometry.hpp"

namespace moveable {

struct SegmentGlyph {
    Point a;
    Point b;
};

struct SquareGlyph {
    Point center;
    int half_side = 0;
};

struct CircleGlyph {
    Point center;
    int radius = 0;
};

struct PolygonGlyph {
    std::vector<Point> vertices;
};

// Plain rectangle, used for object bodies; contour nodes use SquareGlyph.
struct BoxGlyph {
    Rect rect;
};

using Glyph = std::variant<SegmentGlyph, SquareGlyph, CircleGlyph, PolygonGlyph, BoxGlyph>;

enum class Fill {
    None,
    Background,  // painted with the surface color, hiding what lies below
    Solid,       // painted with `color`
};

enum class Layer { Shapes, Contours };

struct RenderPrimitive {
    Glyph glyph;
    Fill fill = Fill::None;
    std::string color = "black";
    Layer layer = Layer::Contours;
};

const char* glyph_name(const Glyph& glyph);

}  // namespace moveable
