#include "moveable/contour.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "moveable/detail/overloaded.hpp"
#include "moveable/errors.hpp"

namespace moveable {

std::string_view to_string(MovementFreedom f) {
    switch (f) {
        case MovementFreedom::None: return "none";
        case MovementFreedom::NS: return "ns";
        case MovementFreedom::WE: return "we";
        case MovementFreedom::Any: return "any";
    }
    return "?";
}

std::string_view to_string(CursorHint c) {
    switch (c) {
        case CursorHint::Default: return "default";
        case CursorHint::Hand: return "hand";
        case CursorHint::SizeAll: return "size_all";
        case CursorHint::SizeNS: return "size_ns";
        case CursorHint::SizeWE: return "size_we";
        case CursorHint::SizeNWSE: return "size_nwse";
        case CursorHint::SizeNESW: return "size_nesw";
    }
    return "?";
}

Node Node::square(int id, Point anchor, int half_side) {
    Node n;
    n.id = id;
    n.anchor = anchor;
    n.area = SquareArea{half_side};
    return n;
}

Node Node::circle(int id, Point anchor, int radius) {
    Node n;
    n.id = id;
    n.anchor = anchor;
    n.area = CircleArea{radius};
    return n;
}

Node Node::polygon(int id, std::vector<Point> vertices) {
    long long sx = 0;
    long long sy = 0;
    for (Point v : vertices) {
        sx += v.x;
        sy += v.y;
    }
    Point anchor;
    if (!vertices.empty()) {
        const auto n = static_cast<long long>(vertices.size());
        anchor = {static_cast<int>(sx / n), static_cast<int>(sy / n)};
    }
    return polygon(id, anchor, std::move(vertices));
}

Node Node::polygon(int id, Point anchor, std::vector<Point> vertices) {
    Node n;
    n.id = id;
    n.anchor = anchor;
    n.area = PolygonArea{std::move(vertices)};
    n.cursor = CursorHint::SizeAll;
    return n;
}

Node Node::null(int id, Point anchor) {
    Node n;
    n.id = id;
    n.anchor = anchor;
    n.area = NullArea{};
    return n;
}

bool node_contains(const Node& node, Point p) {
    const Point c = node.center();
    return std::visit(detail::overloaded{
                          [](const NullArea&) { return false; },
                          [&](const SquareArea& s) {
                              return std::abs(p.x - c.x) <= s.half_side &&
                                     std::abs(p.y - c.y) <= s.half_side;
                          },
                          [&](const CircleArea& s) {
                              const long long dx = p.x - c.x;
                              const long long dy = p.y - c.y;
                              return dx * dx + dy * dy <= static_cast<long long>(s.radius) * s.radius;
                          },
                          [&](const PolygonArea& s) { return point_in_polygon(p, s.vertices); },
                      },
                      node.area);
}

Contour Contour::from_nodes(std::vector<Node> nodes) {
    Contour c;
    c.nodes_ = std::move(nodes);
    const int n = static_cast<int>(c.nodes_.size());
    if (n >= 2) {
        c.connections_.reserve(c.nodes_.size());
        for (int i = 0; i < n; ++i) c.connections_.push_back({i, (i + 1) % n, std::nullopt});
    }
    c.validate();
    return c;
}

Contour::Contour(std::vector<Node> nodes, std::optional<std::vector<Connection>> connections)
    : nodes_(std::move(nodes)), connections_(connections ? std::move(*connections) : std::vector<Connection>{}) {
    validate();
}

void Contour::validate() const {
    if (nodes_.empty()) throw InvariantViolation("contour needs at least one node");
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        const Node& n = nodes_[i];
        if (n.id != static_cast<int>(i)) {
            throw InvariantViolation("node " + std::to_string(i) + " carries id " + std::to_string(n.id));
        }
        std::visit(detail::overloaded{
                       [](const NullArea&) {},
                       [&](const SquareArea& s) {
                           if (s.half_side < 1) throw InvariantViolation("square node " + std::to_string(i) + " has half side < 1");
                       },
                       [&](const CircleArea& s) {
                           if (s.radius < 1) throw InvariantViolation("circle node " + std::to_string(i) + " has radius < 1");
                       },
                       [&](const PolygonArea& s) {
                           if (s.vertices.size() < 3) throw InvariantViolation("polygon node " + std::to_string(i) + " has fewer than 3 vertices");
                       },
                   },
                   n.area);
    }
    const int n = static_cast<int>(nodes_.size());
    for (const Connection& c : connections_) {
        if (c.a < 0 || c.a >= n || c.b < 0 || c.b >= n) {
            throw InvariantViolation("connection (" + std::to_string(c.a) + "," + std::to_string(c.b) +
                                     ") refers to a missing node");
        }
        if (c.a == c.b) throw InvariantViolation("connection joins node " + std::to_string(c.a) + " to itself");
        if (c.sensitivity && *c.sensitivity < 1) throw InvariantViolation("connection sensitivity must be >= 1");
    }
    if (sensitivity_ < 1) throw InvariantViolation("connection sensitivity must be >= 1");
}

void Contour::set_connections_sensitivity(int sensitivity) {
    if (sensitivity < 1) throw InvariantViolation("connection sensitivity must be >= 1");
    sensitivity_ = sensitivity;
    for (Connection& c : connections_) c.sensitivity.reset();
}

MovementFreedom Contour::node_freedom(std::size_t i) const {
    if (i >= nodes_.size()) throw std::out_of_range("node index " + std::to_string(i) + " out of range");
    return nodes_[i].freedom;
}

bool Contour::connection_contains(const Connection& c, Point p) const {
    const Point a = nodes_.at(static_cast<std::size_t>(c.a)).center();
    const Point b = nodes_.at(static_cast<std::size_t>(c.b)).center();
    return dist_to_segment(p, a, b) <= sensitivity_of(c);
}

HitResult Contour::hit_test(Point p) const {
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        const Node& n = nodes_[i];
        if (n.is_catchable() && node_contains(n, p)) return NodeHit{i, n.cursor};
    }
    for (std::size_t j = 0; j < connections_.size(); ++j) {
        if (connection_contains(connections_[j], p)) return ConnectionHit{j, CursorHint::SizeAll};
    }
    return Miss{};
}

Bounds Contour::bounds() const {
    std::optional<Bounds> box;
    auto add = [&](const Bounds& b) { box = box ? box->united(b) : b; };
    for (const Node& n : nodes_) {
        const Point c = n.center();
        std::visit(detail::overloaded{
                       [&](const NullArea&) { add(Bounds::of(c)); },
                       [&](const SquareArea& s) { add(Bounds::around(c, s.half_side)); },
                       [&](const CircleArea& s) { add(Bounds::around(c, s.radius)); },
                       [&](const PolygonArea& s) {
                           for (Point v : s.vertices) add(Bounds::of(v));
                       },
                   },
                   n.area);
    }
    for (const Connection& c : connections_) {
        const int s = sensitivity_of(c);
        add(Bounds::around(nodes_[static_cast<std::size_t>(c.a)].center(), s));
        add(Bounds::around(nodes_[static_cast<std::size_t>(c.b)].center(), s));
    }
    return *box;
}

std::vector<RenderPrimitive> Contour::render_primitives() const {
    std::vector<RenderPrimitive> out;
    out.reserve(connections_.size() + nodes_.size());
    for (const Connection& c : connections_) {
        out.push_back({SegmentGlyph{nodes_[static_cast<std::size_t>(c.a)].center(),
                                    nodes_[static_cast<std::size_t>(c.b)].center()},
                       Fill::None, "red", Layer::Contours});
    }
    for (const Node& n : nodes_) {
        if (!n.is_catchable()) continue;
        const Fill fill = n.clearance ? Fill::Background : Fill::None;
        const Point c = n.center();
        std::visit(detail::overloaded{
                       [](const NullArea&) {},
                       [&](const SquareArea& s) { out.push_back({SquareGlyph{c, s.half_side}, fill, "red", Layer::Contours}); },
                       [&](const CircleArea& s) { out.push_back({CircleGlyph{c, s.radius}, fill, "red", Layer::Contours}); },
                       [&](const PolygonArea& s) { out.push_back({PolygonGlyph{s.vertices}, fill, "red", Layer::Contours}); },
                   },
                   n.area);
    }
    return out;
}

}  // namespace moveable
