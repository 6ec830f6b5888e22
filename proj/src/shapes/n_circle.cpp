#include "moveable/shapes/n_circle.hpp"

#include <cmath>
#include <numbers>

#include "moveable/errors.hpp"

namespace moveable {

int nodes_on_circumference(int radius, int spacing) {
    return static_cast<int>(std::lround(2 * std::numbers::pi * radius / spacing));
}

NCircle::NCircle(Point center, int radius, int small_radius, int spacing, int min_radius)
    : center_(center), nr_big_(radius), nr_small_(small_radius), distance_neighbours_(spacing), min_radius_(min_radius) {
    if (nr_small_ < 1) throw InvariantViolation("ncircle: border node radius must be >= 1");
    if (distance_neighbours_ < 1) throw InvariantViolation("ncircle: node spacing must be >= 1");
    if (min_radius_ < nr_small_) throw InvariantViolation("ncircle: minimum radius below border node radius");
    if (nr_big_ < min_radius_) throw InvariantViolation("ncircle: radius below minimum radius");
    define_contour();
}

Contour NCircle::make_contour() const {
    const int on_perimeter = border_node_count();
    std::vector<Node> nodes;
    nodes.reserve(static_cast<std::size_t>(on_perimeter) + 1);
    nodes.push_back(Node::circle(0, center_, nr_big_ - nr_small_ + 1).with_cursor(CursorHint::SizeAll));
    for (int i = 1; i <= on_perimeter; ++i) {
        const Point p = point_at(center_, 2 * std::numbers::pi * (i - 1) / on_perimeter, nr_big_);
        nodes.push_back(Node::circle(i, p, nr_small_).with_clearance(false));
    }
    return Contour(std::move(nodes), std::nullopt);
}

void NCircle::move(Delta d) { center_ += d; }

bool NCircle::move_contour_point(std::size_t i, Delta d, Point mouse, MouseButton button) {
    if (button != MouseButton::Left) return false;
    if (i == 0) {
        if (d.is_zero()) return false;
        move(d);
        return true;
    }
    const int radius = static_cast<int>(std::lround(distance(center_, mouse)));
    if (radius != nr_big_ && radius >= min_radius_) {
        nr_big_ = radius;
        return true;
    }
    return false;
}

Rect NCircle::bounds() const {
    return {center_.x - nr_big_, center_.y - nr_big_, 2 * nr_big_ + 1, 2 * nr_big_ + 1};
}

std::vector<RenderPrimitive> NCircle::appearance() const {
    return {{CircleGlyph{center_, nr_big_}, Fill::Solid, "#8fd18f", Layer::Shapes}};
}

}  // namespace moveable
