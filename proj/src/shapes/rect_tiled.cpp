#include "moveable/shapes/rect_tiled.hpp"

#include <algorithm>

#include "rect_edges.hpp"

namespace moveable {

std::vector<Point> squares_on_rectangle(const Rect& rc, int& half_side) {
    const int side = std::min(rc.width, rc.height);
    half_side = side / 2;
    const bool horizontal = rc.width >= rc.height;
    const int length = horizontal ? rc.width : rc.height;
    const int count = (length + side - 1) / side;

    std::vector<Point> centers;
    centers.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        int along = k * side + half_side;
        if (k == count - 1 && count > 1) along = length - 1 - half_side;
        centers.push_back(horizontal ? Point{rc.left() + along, rc.top() + half_side}
                                     : Point{rc.left() + half_side, rc.top() + along});
    }
    return centers;
}

RectTiled::RectTiled(Rect rc) : rc_(rc) {
    detail::check_rect(type_tag(), rc_, 2, 2);
    define_contour();
}

Contour RectTiled::make_contour() const {
    int half = 0;
    const std::vector<Point> pt = squares_on_rectangle(rc_, half);
    std::vector<Node> ca;
    ca.reserve(pt.size());
    for (std::size_t i = 0; i < pt.size(); ++i) {
        ca.push_back(Node::square(static_cast<int>(i), pt[i], half).with_clearance(false));
    }
    return Contour(std::move(ca), std::nullopt);
}

void RectTiled::move(Delta d) {
    rc_.x += d.dx;
    rc_.y += d.dy;
}

bool RectTiled::move_contour_point(std::size_t, Delta d, Point, MouseButton button) {
    if (button != MouseButton::Left || d.is_zero()) return false;
    move(d);
    return true;
}

std::vector<RenderPrimitive> RectTiled::appearance() const { return {detail::body_box(rc_, "#e8e39e")}; }

}  // namespace moveable
