#include "moveable/shapes/rect_full.hpp"

#include "rect_edges.hpp"

namespace moveable {

namespace {
using namespace detail;
// corners LT, RT, RB, LB; strips left, top, right, bottom
constexpr std::array<unsigned, 8> kNodeEdges = {kLeft | kTop, kRight | kTop, kRight | kBottom, kLeft | kBottom,
                                                kLeft,        kTop,          kRight,           kBottom};
constexpr std::size_t kInteriorNode = 8;
}  // namespace

RectFull::RectFull(Rect rc, int min_width, int min_height)
    : rc_(rc), min_width_(min_width), min_height_(min_height) {
    check_rect(type_tag(), rc_, min_width_, min_height_);
    define_contour();
}

Contour RectFull::make_contour() const {
    const int half = kHalfStrip;
    const int l = rc_.left(), t = rc_.top(), r = rc_.right(), b = rc_.bottom();
    std::vector<Node> nodes;
    nodes.reserve(9);
    nodes.push_back(Node::circle(0, {l, t}, kCornerRadius).with_cursor(CursorHint::SizeNWSE));
    nodes.push_back(Node::circle(1, {r, t}, kCornerRadius).with_cursor(CursorHint::SizeNESW));
    nodes.push_back(Node::circle(2, {r, b}, kCornerRadius).with_cursor(CursorHint::SizeNWSE));
    nodes.push_back(Node::circle(3, {l, b}, kCornerRadius).with_cursor(CursorHint::SizeNESW));
    nodes.push_back(Node::polygon(4, {{l - half, t}, {l + half, t}, {l + half, b}, {l - half, b}})
                        .with_freedom(MovementFreedom::WE)
                        .with_cursor(CursorHint::SizeWE));
    nodes.push_back(Node::polygon(5, {{l, t - half}, {r, t - half}, {r, t + half}, {l, t + half}})
                        .with_freedom(MovementFreedom::NS)
                        .with_cursor(CursorHint::SizeNS));
    nodes.push_back(Node::polygon(6, {{r - half, t}, {r + half, t}, {r + half, b}, {r - half, b}})
                        .with_freedom(MovementFreedom::WE)
                        .with_cursor(CursorHint::SizeWE));
    nodes.push_back(Node::polygon(7, {{l, b - half}, {r, b - half}, {r, b + half}, {l, b + half}})
                        .with_freedom(MovementFreedom::NS)
                        .with_cursor(CursorHint::SizeNS));
    nodes.push_back(Node::polygon(8, {{l, t}, {r, t}, {r, b}, {l, b}}));
    return Contour(std::move(nodes), std::nullopt);
}

void RectFull::move(Delta d) {
    rc_.x += d.dx;
    rc_.y += d.dy;
}

bool RectFull::move_contour_point(std::size_t i, Delta d, Point, MouseButton button) {
    if (button != MouseButton::Left) return false;
    if (i == kInteriorNode) {
        if (d.is_zero()) return false;
        move(d);
        return true;
    }
    if (i >= kNodeEdges.size()) return false;
    return drag_edges(rc_, kNodeEdges[i], d, {min_width_, INT_MAX, min_height_, INT_MAX}, LimitMode::Reject);
}

std::vector<RenderPrimitive> RectFull::appearance() const { return {body_box(rc_, "#b3d9d9")}; }

}  // namespace moveable
