#include "moveable/shapes/regular_polygon.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "moveable/errors.hpp"

namespace moveable {

RegularPolygon::RegularPolygon(Point center, int inradius, int vertex_count, double angle)
    : center_(center), inradius_(inradius), vertex_count_(vertex_count), angle_(angle) {
    if (inradius_ < 1) throw InvariantViolation("regular_polygon: inradius must be >= 1");
    if (vertex_count_ < 3) throw InvariantViolation("regular_polygon: needs at least 3 vertices");
    define_contour();
}

std::vector<Point> RegularPolygon::vertices() const {
    const double step = 2 * std::numbers::pi / vertex_count_;
    const double circumradius = inradius_ / std::cos(step / 2);
    std::vector<Point> v;
    v.reserve(static_cast<std::size_t>(vertex_count_));
    for (int k = 0; k < vertex_count_; ++k) v.push_back(point_at(center_, angle_ + step * k, circumradius));
    return v;
}

Contour RegularPolygon::make_contour() const {
    std::vector<Node> ca = {Node::circle(0, center_, inradius_)};
    return Contour(std::move(ca), std::nullopt);
}

void RegularPolygon::move(Delta d) { center_ += d; }

bool RegularPolygon::move_contour_point(std::size_t, Delta d, Point, MouseButton button) {
    if (button != MouseButton::Left || d.is_zero()) return false;
    move(d);
    return true;
}

Rect RegularPolygon::bounds() const {
    const auto v = vertices();
    auto [minx, maxx] = std::minmax_element(v.begin(), v.end(), [](Point a, Point b) { return a.x < b.x; });
    auto [miny, maxy] = std::minmax_element(v.begin(), v.end(), [](Point a, Point b) { return a.y < b.y; });
    return {minx->x, miny->y, maxx->x - minx->x + 1, maxy->y - miny->y + 1};
}

std::vector<RenderPrimitive> RegularPolygon::appearance() const {
    return {{PolygonGlyph{vertices()}, Fill::Solid, "#f0a0a0", Layer::Shapes}};
}

}  // namespace moveable
