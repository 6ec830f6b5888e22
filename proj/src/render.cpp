#include "moveable/render.hpp"

#include "moveable/detail/overloaded.hpp"

namespace moveable {

const char* glyph_name(const Glyph& glyph) {
    return std::visit(detail::overloaded{
                          [](const SegmentGlyph&) { return "segment"; },
                          [](const SquareGlyph&) { return "square"; },
                          [](const CircleGlyph&) { return "circle"; },
                          [](const PolygonGlyph&) { return "polygon"; },
                          [](const BoxGlyph&) { return "box"; },
                      },
                      glyph);
}

}  // namespace moveable
