#include "moveable/shapes/rect_eight_node.hpp"

#include "rect_edges.hpp"

namespace moveable {

std::string_view to_string(ContourResize r) {
    switch (r) {
        case ContourResize::None: return "none";
        case ContourResize::NS: return "ns";
        case ContourResize::WE: return "we";
        case ContourResize::Any: return "any";
    }
    return "?";
}

std::array<HandleSpec, 8> eight_handle_specs(ContourResize mode) {
    using MF = MovementFreedom;
    using C = CursorHint;
    std::array<HandleSpec, 8> specs{};
    switch (mode) {
        case ContourResize::Any:
            specs = {{{MF::Any, C::SizeNWSE}, {MF::NS, C::SizeNS}, {MF::Any, C::SizeNESW}, {MF::WE, C::SizeWE},
                      {MF::Any, C::SizeNWSE}, {MF::NS, C::SizeNS}, {MF::Any, C::SizeNESW}, {MF::WE, C::SizeWE}}};
            break;
        case ContourResize::NS:
            specs.fill({MF::NS, C::SizeNS});
            specs[3] = specs[7] = {MF::None, C::SizeAll};
            break;
        case ContourResize::WE:
            specs.fill({MF::WE, C::SizeWE});
            specs[1] = specs[5] = {MF::None, C::SizeAll};
            break;
        case ContourResize::None:
            specs.fill({MF::None, C::SizeAll});
            break;
    }
    return specs;
}

RectEightNode::RectEightNode(Rect rc, ContourResize resize, int min_width, int min_height)
    : rc_(rc), resize_(resize), min_width_(min_width), min_height_(min_height) {
    detail::check_rect(type_tag(), rc_, min_width_, min_height_);
    define_contour();
}

Contour RectEightNode::make_contour() const {
    const int cx = rc_.left() + rc_.width / 2;
    const int cy = rc_.top() + rc_.height / 2;
    const std::array<Point, 8> pt = {{{rc_.left(), rc_.top()},
                                      {cx, rc_.top()},
                                      {rc_.right(), rc_.top()},
                                      {rc_.right(), cy},
                                      {rc_.right(), rc_.bottom()},
                                      {cx, rc_.bottom()},
                                      {rc_.left(), rc_.bottom()},
                                      {rc_.left(), cy}}};
    const auto specs = eight_handle_specs(resize_);
    std::vector<Node> nodes;
    nodes.reserve(8);
    for (int i = 0; i < 8; ++i) {
        const auto& spec = specs[static_cast<std::size_t>(i)];
        Node n = Node::square(i, pt[static_cast<std::size_t>(i)]).with_freedom(spec.freedom).with_cursor(spec.cursor);
        if (spec.freedom == MovementFreedom::None) n.area = NullArea{};
        nodes.push_back(std::move(n));
    }
    return Contour::from_nodes(std::move(nodes));
}

void RectEightNode::move(Delta d) {
    rc_.x += d.dx;
    rc_.y += d.dy;
}

bool RectEightNode::move_contour_point(std::size_t i, Delta d, Point, MouseButton button) {
    if (button != MouseButton::Left || i >= detail::kEightHandleEdges.size()) return false;
    const MovementFreedom mf = contour().node_freedom(i);
    const bool vertical = mf == MovementFreedom::Any || mf == MovementFreedom::NS;
    const bool horizontal = mf == MovementFreedom::Any || mf == MovementFreedom::WE;
    const unsigned edges = detail::gate_edges(detail::kEightHandleEdges[i], vertical, horizontal);
    return detail::drag_edges(rc_, edges, d, {min_width_, INT_MAX, min_height_, INT_MAX}, detail::LimitMode::Reject);
}

std::vector<RenderPrimitive> RectEightNode::appearance() const { return {detail::body_box(rc_, "#f2c894")}; }

}  // namespace moveable
