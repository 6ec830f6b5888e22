#include "moveable/shapes/rect_solid_move.hpp"

#include <algorithm>

#include "rect_edges.hpp"

namespace moveable {

RectSolidMove::RectSolidMove(Rect rc) : rc_(rc) {
    detail::check_rect(type_tag(), rc_, 2, 2);
    define_contour();
}

Contour RectSolidMove::make_contour() const {
    const int half = std::min(rc_.width, rc_.height) / 2;
    const Point p0{rc_.left() + half, rc_.top() + half};
    const Point p1 = rc_.width >= rc_.height ? Point{rc_.right() - 1 - half, p0.y}
                                             : Point{p0.x, rc_.bottom() - 1 - half};
    std::vector<Node> nodes;
    for (int i = 0; i < 2; ++i) {
        nodes.push_back(Node::square(i, i == 0 ? p0 : p1, half).with_cursor(CursorHint::SizeAll).with_clearance(false));
    }
    // A loop over two nodes would double the strip; one connection is enough.
    Contour contour(std::move(nodes), std::vector<Connection>{Connection{0, 1, std::nullopt}});
    contour.set_connections_sensitivity(half);
    return contour;
}

void RectSolidMove::move(Delta d) {
    rc_.x += d.dx;
    rc_.y += d.dy;
}

bool RectSolidMove::move_contour_point(std::size_t, Delta d, Point, MouseButton button) {
    if (button != MouseButton::Left || d.is_zero()) return false;
    move(d);
    return true;
}

std::vector<RenderPrimitive> RectSolidMove::appearance() const { return {detail::body_box(rc_, "#d9b3e6")}; }

}  // namespace moveable
