#include "moveable/shapes/graph_object.hpp"

#include <algorithm>

#include "moveable/errors.hpp"

namespace moveable {

GraphObject::GraphObject(std::vector<Point> pt, std::vector<int> radius, std::vector<std::string> color,
                         std::vector<GraphLink> links)
    : pt_(std::move(pt)), radius_(std::move(radius)), color_(std::move(color)), links_(std::move(links)) {
    if (pt_.empty()) throw InvariantViolation("graph: needs at least one vertex");
    if (radius_.size() != pt_.size() || color_.size() != pt_.size()) {
        throw InvariantViolation("graph: points, radii and colors differ in length");
    }
    if (std::any_of(radius_.begin(), radius_.end(), [](int r) { return r < 1; })) {
        throw InvariantViolation("graph: vertex radius must be >= 1");
    }
    define_contour();  // validates link indices
}

Contour GraphObject::make_contour() const {
    std::vector<Node> nodes;
    nodes.reserve(pt_.size());
    for (std::size_t i = 0; i < pt_.size(); ++i) {
        nodes.push_back(Node::circle(static_cast<int>(i), pt_[i], radius_[i]));
    }
    std::vector<Connection> cc;
    cc.reserve(links_.size());
    for (const GraphLink& l : links_) cc.push_back({l.a, l.b, std::nullopt});
    return Contour(std::move(nodes), std::move(cc));
}

void GraphObject::move(Delta d) {
    for (Point& p : pt_) p += d;
}

bool GraphObject::move_contour_point(std::size_t i, Delta d, Point, MouseButton button) {
    if (button != MouseButton::Left || i >= pt_.size() || d.is_zero()) return false;
    pt_[i] += d;
    return true;
}

Rect GraphObject::bounds() const {
    int l = pt_[0].x, t = pt_[0].y, r = l, b = t;
    for (std::size_t i = 0; i < pt_.size(); ++i) {
        l = std::min(l, pt_[i].x - radius_[i]);
        t = std::min(t, pt_[i].y - radius_[i]);
        r = std::max(r, pt_[i].x + radius_[i]);
        b = std::max(b, pt_[i].y + radius_[i]);
    }
    return {l, t, r - l + 1, b - t + 1};
}

std::vector<RenderPrimitive> GraphObject::appearance() const {
    std::vector<RenderPrimitive> out;
    for (const GraphLink& l : links_) {
        out.push_back({SegmentGlyph{pt_[static_cast<std::size_t>(l.a)], pt_[static_cast<std::size_t>(l.b)]},
                       Fill::None, "#404040", Layer::Shapes});
    }
    for (std::size_t i = 0; i < pt_.size(); ++i) {
        out.push_back({CircleGlyph{pt_[i], radius_[i]}, Fill::Solid, color_[i], Layer::Shapes});
    }
    return out;
}

}  // namespace moveable
