#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "moveable/geometry.hpp"
#include "moveable/render.hpp"

namespace moveable {

// Possible sole movements of a node.
enum class MovementFreedom { None, NS, WE, Any };

enum class CursorHint { Default, Hand, SizeAll, SizeNS, SizeWE, SizeNWSE, SizeNESW };

std::string_view to_string(MovementFreedom f);
std::string_view to_string(CursorHint c);

inline constexpr int kDefaultSquareHalfSide = 3;
inline constexpr int kDefaultCircleRadius = 5;
inline constexpr int kDefaultConnectionSensitivity = 3;

struct NullArea {
    friend bool operator==(const NullArea&, const NullArea&) = default;
};
struct SquareArea {
    int half_side = kDefaultSquareHalfSide;
    friend bool operator==(const SquareArea&, const SquareArea&) = default;
};
struct CircleArea {
    int radius = kDefaultCircleRadius;
    friend bool operator==(const CircleArea&, const CircleArea&) = default;
};
struct PolygonArea {
    std::vector<Point> vertices;
    friend bool operator==(const PolygonArea&, const PolygonArea&) = default;
};

using NodeArea = std::variant<NullArea, SquareArea, CircleArea, PolygonArea>;

// One sensitive area of a contour.
//
// Square and circle areas are centered at anchor + shift. Polygon areas are
// described by their vertices alone; their anchor + shift still serves as the
// endpoint of connections. Defaults follow the usual node construction: no shift,
// free movement, hand cursor, background clearance on.
struct Node {
    int id = 0;
    Point anchor;
    Delta shift;
    NodeArea area = SquareArea{};
    MovementFreedom freedom = MovementFreedom::Any;
    CursorHint cursor = CursorHint::Hand;
    bool clearance = true;

    static Node square(int id, Point anchor, int half_side = kDefaultSquareHalfSide);
    static Node circle(int id, Point anchor, int radius = kDefaultCircleRadius);
    // Anchor defaults to the vertex centroid; cursor defaults to SizeAll.
    static Node polygon(int id, std::vector<Point> vertices);
    static Node polygon(int id, Point anchor, std::vector<Point> vertices);
    static Node null(int id, Point anchor);

    Node&& with_shift(Delta d) && { shift = d; return std::move(*this); }
    Node&& with_freedom(MovementFreedom f) && { freedom = f; return std::move(*this); }
    Node&& with_cursor(CursorHint c) && { cursor = c; return std::move(*this); }
    Node&& with_clearance(bool c) && { clearance = c; return std::move(*this); }
    Node&& with_area(NodeArea a) && { area = std::move(a); return std::move(*this); }

    Point center() const { return anchor + shift; }
    bool is_null() const { return std::holds_alternative<NullArea>(area); }
    // Null areas and non-moveable nodes are never caught.
    bool is_catchable() const { return !is_null() && freedom != MovementFreedom::None; }

    friend bool operator==(const Node&, const Node&) = default;
};

struct Connection {
    int a = 0;
    int b = 0;
    // Individual grab width; absent means the contour-wide value.
    std::optional<int> sensitivity;

    friend bool operator==(const Connection&, const Connection&) = default;
};

struct Miss {
    friend bool operator==(const Miss&, const Miss&) = default;
};
struct NodeHit {
    std::size_t node = 0;
    CursorHint cursor = CursorHint::Hand;
    friend bool operator==(const NodeHit&, const NodeHit&) = default;
};
struct ConnectionHit {
    std::size_t connection = 0;
    CursorHint cursor = CursorHint::SizeAll;
    friend bool operator==(const ConnectionHit&, const ConnectionHit&) = default;
};

using HitResult = std::variant<Miss, NodeHit, ConnectionHit>;

inline bool is_miss(const HitResult& h) { return std::holds_alternative<Miss>(h); }

bool node_contains(const Node& node, Point p);

// Nodes plus the strips between them. Immutable once built; objects rebuild
// their contour from geometry instead of editing it.
class Contour {
public:
    // Nodes joined into a closed loop 0-1-...-(n-1)-0. A single node gets
    // no connections.
    static Contour from_nodes(std::vector<Node> nodes);

    // Exactly the given connections; std::nullopt means "no connections".
    Contour(std::vector<Node> nodes, std::optional<std::vector<Connection>> connections);

    const std::vector<Node>& nodes() const { return nodes_; }
    const std::vector<Connection>& connections() const { return connections_; }
    std::size_t node_count() const { return nodes_.size(); }

    int connections_sensitivity() const { return sensitivity_; }
    // Sets the grab width of every connection, dropping individual values.
    void set_connections_sensitivity(int sensitivity);
    int sensitivity_of(const Connection& c) const { return c.sensitivity.value_or(sensitivity_); }

    MovementFreedom node_freedom(std::size_t i) const;
    bool connection_contains(const Connection& c, Point p) const;
    HitResult hit_test(Point p) const;

    // Extents of every non-null node area and every connection strip.
    Bounds bounds() const;

    // Connections first, then node glyphs; null and non-moveable nodes are
    // not drawn.
    std::vector<RenderPrimitive> render_primitives() const;

    friend bool operator==(const Contour&, const Contour&) = default;

private:
    Contour() = default;
    void validate() const;

    std::vector<Node> nodes_;
    std::vector<Connection> connections_;
    int sensitivity_ = kDefaultConnectionSensitivity;
};

}  // namespace moveable
