#include "moveable/shapes/screw_nut.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "moveable/errors.hpp"

namespace moveable {

ScrewNut::ScrewNut(Point center, int inner_radius, int outer_radius, double angle)
    : center_(center), r_inner_(inner_radius), r_outer_(outer_radius), angle_(angle) {
    if (r_inner_ < 1 || r_outer_ <= r_inner_) {
        throw InvariantViolation("screw_nut: need 0 < inner radius < outer radius");
    }
    define_contour();
}

std::vector<Point> ScrewNut::hexagon(int radius) const {
    std::vector<Point> v(6);
    for (int i = 0; i < 6; ++i) {
        v[static_cast<std::size_t>(i)] = point_at(center_, angle_ + 2 * std::numbers::pi * i / 6, radius);
    }
    return v;
}

std::vector<Point> ScrewNut::inner_vertices() const { return hexagon(r_inner_); }
std::vector<Point> ScrewNut::outer_vertices() const { return hexagon(r_outer_); }

Contour ScrewNut::make_contour() const {
    const auto in = inner_vertices();
    const auto out = outer_vertices();
    std::vector<Node> ca;
    ca.reserve(6);
    for (std::size_t i = 0; i < 6; ++i) {
        const std::size_t i1 = (i + 1) % 6;
        ca.push_back(Node::polygon(static_cast<int>(i), {in[i], in[i1], out[i1], out[i]}).with_clearance(false));
    }
    return Contour(std::move(ca), std::nullopt);
}

void ScrewNut::move(Delta d) { center_ += d; }

bool ScrewNut::move_contour_point(std::size_t, Delta d, Point, MouseButton button) {
    if (button != MouseButton::Left || d.is_zero()) return false;
    move(d);
    return true;
}

Rect ScrewNut::bounds() const {
    const auto v = outer_vertices();
    auto [minx, maxx] = std::minmax_element(v.begin(), v.end(), [](Point a, Point b) { return a.x < b.x; });
    auto [miny, maxy] = std::minmax_element(v.begin(), v.end(), [](Point a, Point b) { return a.y < b.y; });
    return {minx->x, miny->y, maxx->x - minx->x + 1, maxy->y - miny->y + 1};
}

std::vector<RenderPrimitive> ScrewNut::appearance() const {
    return {{PolygonGlyph{outer_vertices()}, Fill::Solid, "#a0a0b0", Layer::Shapes},
            {PolygonGlyph{inner_vertices()}, Fill::Background, "black", Layer::Shapes}};
}

}  // namespace moveable
