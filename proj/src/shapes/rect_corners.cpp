#include "moveable/shapes/rect_corners.hpp"

#include "rect_edges.hpp"

namespace moveable {

namespace {
// LT, RT, RB, LB
constexpr std::array<unsigned, 4> kCornerEdges = {
    detail::kLeft | detail::kTop, detail::kRight | detail::kTop,
    detail::kRight | detail::kBottom, detail::kLeft | detail::kBottom};
}  // namespace

RectCorners::RectCorners(Rect rc, CornerStyle style, int min_width, int min_height)
    : rc_(rc), style_(style), min_width_(min_width), min_height_(min_height) {
    detail::check_rect(type_tag(), rc_, min_width_, min_height_);
    define_contour();
}

Contour RectCorners::make_contour() const {
    if (style_ == CornerStyle::ShiftedSquares) {
        const int s = kShift;
        std::vector<Node> ca;
        ca.push_back(Node::square(0, {rc_.left() - s, rc_.top() - s}));
        // Same kind of placement, written as anchor plus shift.
        ca.push_back(Node::square(1, rc_.top_right()).with_shift({s, -s}));
        ca.push_back(Node::square(2, {rc_.right() + s, rc_.bottom() + s}));
        ca.push_back(Node::square(3, {rc_.left() - s, rc_.bottom() + s}));
        std::vector<Connection> cc = {{0, 1, {}}, {1, 2, {}}, {2, 3, {}}, {3, 0, {}}};
        return Contour(std::move(ca), std::move(cc));
    }
    std::vector<Node> nodes = {
        Node::circle(0, rc_.top_left(), kCircleRadius),
        Node::circle(1, rc_.top_right(), kCircleRadius),
        Node::circle(2, rc_.bottom_right(), kCircleRadius),
        Node::circle(3, rc_.bottom_left(), kCircleRadius),
    };
    return Contour::from_nodes(std::move(nodes));
}

void RectCorners::move(Delta d) {
    rc_.x += d.dx;
    rc_.y += d.dy;
}

bool RectCorners::move_contour_point(std::size_t i, Delta d, Point, MouseButton button) {
    if (button != MouseButton::Left || i >= kCornerEdges.size()) return false;
    return detail::drag_edges(rc_, kCornerEdges[i], d, {min_width_, INT_MAX, min_height_, INT_MAX},
                              detail::LimitMode::Reject);
}

std::vector<RenderPrimitive> RectCorners::appearance() const {
    return {detail::body_box(rc_, style_ == CornerStyle::ShiftedSquares ? "#9ec5e8" : "#a8d8a8")};
}

}  // namespace moveable
