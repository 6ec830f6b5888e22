#include "moveable/shapes/n_ring.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "moveable/errors.hpp"
#include "moveable/shapes/n_circle.hpp"

namespace moveable {

NRing::NRing(Point center, int inner_radius, int outer_radius, int small_radius, int spacing)
    : center_(center), nr_inner_(inner_radius), nr_outer_(outer_radius), nr_small_(small_radius),
      distance_neighbours_(spacing) {
    if (nr_inner_ < 1 || nr_outer_ <= nr_inner_) throw InvariantViolation("nring: need 0 < inner radius < outer radius");
    if (nr_small_ < 1) throw InvariantViolation("nring: border node radius must be >= 1");
    if (distance_neighbours_ < 1) throw InvariantViolation("nring: node spacing must be >= 1");
    redefine_contour();
}

void NRing::redefine_contour() {
    // The outer border needs a few nodes for the trapezoid indexing to make sense.
    n_outer_ = std::max(3, nodes_on_circumference(nr_outer_, distance_neighbours_));
    n_inner_ = nodes_on_circumference(nr_inner_, distance_neighbours_);
    n_poly_ = n_outer_ / 2 + 1;
    define_contour();
}

Contour NRing::make_contour() const {
    const double full = 2 * std::numbers::pi;
    const int n_small = n_outer_ + n_inner_;
    std::vector<Node> nodes;
    nodes.reserve(static_cast<std::size_t>(n_small + n_poly_));

    std::vector<Point> pt_outer(static_cast<std::size_t>(n_outer_));
    for (int i = 0; i < n_outer_; ++i) {
        pt_outer[static_cast<std::size_t>(i)] = point_at(center_, full * i / n_outer_, nr_outer_);
        nodes.push_back(Node::circle(i, pt_outer[static_cast<std::size_t>(i)], nr_small_).with_clearance(false));
    }
    for (int i = 0; i < n_inner_; ++i) {
        const Point p = point_at(center_, full * i / n_inner_, nr_inner_);
        nodes.push_back(Node::circle(n_outer_ + i, p, nr_small_).with_clearance(false));
    }
    const double ratio = static_cast<double>(nr_inner_) / nr_outer_;
    for (int i = 0; i < n_poly_; ++i) {
        const int j = (i * 2) % n_outer_;
        const Point p0_out = pt_outer[static_cast<std::size_t>(j)];
        const Point p1_out = pt_outer[static_cast<std::size_t>((j + 2) % n_outer_)];
        const Point p0_in = point_on_line(center_, p0_out, ratio);
        const Point p1_in = point_on_line(center_, p1_out, ratio);
        nodes.push_back(Node::polygon(n_small + i, {p0_in, p0_out, p1_out, p1_in}));
    }
    return Contour(std::move(nodes), std::nullopt);
}

void NRing::move(Delta d) { center_ += d; }

bool NRing::move_contour_point(std::size_t i, Delta d, Point mouse, MouseButton button) {
    if (button != MouseButton::Left) return false;
    const auto n_outer = static_cast<std::size_t>(n_outer_);
    const auto n_small = n_outer + static_cast<std::size_t>(n_inner_);
    if (i >= n_small) {
        if (d.is_zero()) return false;
        move(d);
        return true;
    }
    const int wanted = static_cast<int>(std::lround(distance(center_, mouse)));
    if (i < n_outer) {
        const int r = std::max(wanted, nr_inner_ + kMinRadialGap);
        if (r == nr_outer_) return false;
        nr_outer_ = r;
        return true;
    }
    const int r = std::clamp(wanted, 1, std::max(1, nr_outer_ - kMinRadialGap));
    if (r == nr_inner_) return false;
    nr_inner_ = r;
    return true;
}

Rect NRing::bounds() const {
    return {center_.x - nr_outer_, center_.y - nr_outer_, 2 * nr_outer_ + 1, 2 * nr_outer_ + 1};
}

std::vector<RenderPrimitive> NRing::appearance() const {
    return {{CircleGlyph{center_, nr_outer_}, Fill::Solid, "#e6b87d", Layer::Shapes},
            {CircleGlyph{center_, nr_inner_}, Fill::Background, "black", Layer::Shapes}};
}

}  // namespace moveable
