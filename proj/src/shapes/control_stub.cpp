#include "moveable/shapes/control_stub.hpp"

#include "rect_edges.hpp"

namespace moveable {

ControlStub::ControlStub(std::string id, Rect rc, ContourResize resize, int min_width, int max_width, int min_height,
                         int max_height)
    : id_(std::move(id)), rc_(rc), resize_(resize), min_width_(min_width), max_width_(max_width),
      min_height_(min_height), max_height_(max_height) {
    detail::check_rect(type_tag(), rc_, min_width_, min_height_);
    if (rc_.width > max_width_ || rc_.height > max_height_) {
        throw InvariantViolation("control: size above maximum");
    }
    define_contour();
}

Contour ControlStub::make_contour() const {
    const int fl = rc_.left() - kFrameGap;
    const int ft = rc_.top() - kFrameGap;
    const int fr = rc_.right() - 1 + kFrameGap;
    const int fb = rc_.bottom() - 1 + kFrameGap;
    const int mx = rc_.left() + rc_.width / 2;
    const int my = rc_.top() + rc_.height / 2;
    const int hx = side_handle_length(rc_.width) / 2;
    const int hy = side_handle_length(rc_.height) / 2;
    const int b = kBandHalf;
    const int s = kCornerShift;

    auto corner = [&](int id, Point anchor, Delta shift) { return Node::square(id, anchor, kCornerHalf).with_shift(shift); };
    auto horizontal_handle = [&](int id, int y) {
        return Node::polygon(id, {mx, y}, {{mx - hx, y - b}, {mx + hx, y - b}, {mx + hx, y + b}, {mx - hx, y + b}});
    };
    auto vertical_handle = [&](int id, int x) {
        return Node::polygon(id, {x, my}, {{x - b, my - hy}, {x + b, my - hy}, {x + b, my + hy}, {x - b, my + hy}});
    };

    std::vector<Node> nodes;
    nodes.reserve(8);
    nodes.push_back(corner(0, {fl, ft}, {-s, -s}));
    nodes.push_back(horizontal_handle(1, ft));
    nodes.push_back(corner(2, {fr, ft}, {s, -s}));
    nodes.push_back(vertical_handle(3, fr));
    nodes.push_back(corner(4, {fr, fb}, {s, s}));
    nodes.push_back(horizontal_handle(5, fb));
    nodes.push_back(corner(6, {fl, fb}, {-s, s}));
    nodes.push_back(vertical_handle(7, fl));

    const auto specs = eight_handle_specs(resize_);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        nodes[i].freedom = specs[i].freedom;
        nodes[i].cursor = specs[i].cursor;
        if (specs[i].freedom == MovementFreedom::None) nodes[i].area = NullArea{};
    }
    return Contour::from_nodes(std::move(nodes));
}

void ControlStub::move(Delta d) {
    rc_.x += d.dx;
    rc_.y += d.dy;
}

bool ControlStub::move_contour_point(std::size_t i, Delta d, Point, MouseButton button) {
    if (button != MouseButton::Left || i >= detail::kEightHandleEdges.size()) return false;
    const MovementFreedom mf = contour().node_freedom(i);
    const bool vertical = mf == MovementFreedom::Any || mf == MovementFreedom::NS;
    const bool horizontal = mf == MovementFreedom::Any || mf == MovementFreedom::WE;
    const unsigned edges = detail::gate_edges(detail::kEightHandleEdges[i], vertical, horizontal);
    return detail::drag_edges(rc_, edges, d, {min_width_, max_width_, min_height_, max_height_},
                              detail::LimitMode::Clamp);
}

std::vector<RenderPrimitive> ControlStub::appearance() const {
    return {{BoxGlyph{rc_}, Fill::Solid, "#e0e0e0", Layer::Shapes}};
}

}  // namespace moveable
