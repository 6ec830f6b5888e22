#include "moveable/svg.hpp"

#include <sstream>

#include "moveable/detail/overloaded.hpp"

namespace moveable {

namespace {

constexpr const char* kSurface = "white";

void write_primitive(std::ostringstream& out, const RenderPrimitive& p) {
    const bool contour = p.layer == Layer::Contours;
    std::string fill = "none";
    std::string stroke = p.color;
    if (p.fill == Fill::Background) fill = kSurface;
    if (p.fill == Fill::Solid) {
        fill = p.color;
        stroke = "black";
    }
    const bool segment = std::holds_alternative<SegmentGlyph>(p.glyph);
    const char* cls = !contour ? "shape" : segment ? "contour-connection" : "contour-node";
    const std::string paint = "\" fill=\"" + fill + "\" stroke=\"" + stroke + "\"/>\n";

    std::visit(detail::overloaded{
                   [&](const SegmentGlyph& g) {
                       out << "<line class=\"" << cls << "\" x1=\"" << g.a.x << "\" y1=\"" << g.a.y << "\" x2=\"" << g.b.x
                           << "\" y2=\"" << g.b.y << "\" stroke=\"" << p.color << "\"/>\n";
                   },
                   [&](const SquareGlyph& g) {
                       out << "<rect class=\"" << cls << "\" x=\"" << g.center.x - g.half_side << "\" y=\""
                           << g.center.y - g.half_side << "\" width=\"" << 2 * g.half_side << "\" height=\""
                           << 2 * g.half_side << paint;
                   },
                   [&](const CircleGlyph& g) {
                       out << "<circle class=\"" << cls << "\" cx=\"" << g.center.x << "\" cy=\"" << g.center.y
                           << "\" r=\"" << g.radius << paint;
                   },
                   [&](const PolygonGlyph& g) {
                       out << "<polygon class=\"" << cls << "\" points=\"";
                       for (std::size_t i = 0; i < g.vertices.size(); ++i) {
                           out << (i ? " " : "") << g.vertices[i].x << ',' << g.vertices[i].y;
                       }
                       out << paint;
                   },
                   [&](const BoxGlyph& g) {
                       out << "<rect class=\"" << cls << "\" x=\"" << g.rect.x << "\" y=\"" << g.rect.y << "\" width=\""
                           << g.rect.width << "\" height=\"" << g.rect.height << paint;
                   },
               },
               p.glyph);
}

}  // namespace

std::vector<RenderPrimitive> shape_primitives(const Mover& mover) {
    std::vector<RenderPrimitive> out;
    for (std::size_t i = mover.size(); i-- > 0;) {
        auto prims = mover[i].appearance();
        out.insert(out.end(), std::make_move_iterator(prims.begin()), std::make_move_iterator(prims.end()));
    }
    return out;
}

std::string emit_svg(const Mover& mover, bool show_contours) {
    const WorkArea w = mover.work_area();
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w.width << "\" height=\"" << w.height
        << "\" viewBox=\"0 0 " << w.width << ' ' << w.height << "\">\n";
    out << "<rect x=\"0\" y=\"0\" width=\"" << w.width << "\" height=\"" << w.height << "\" fill=\"" << kSurface
        << "\"/>\n";
    out << "<g id=\"shapes\">\n";
    for (const RenderPrimitive& p : shape_primitives(mover)) write_primitive(out, p);
    out << "</g>\n";
    if (show_contours) {
        out << "<g id=\"contours\">\n";
        for (const RenderPrimitive& p : mover.draw_contours()) write_primitive(out, p);
        out << "</g>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string emit_svg(const Scene& scene, bool show_contours) { return emit_svg(build_mover(scene), show_contours); }

}  // namespace moveable
