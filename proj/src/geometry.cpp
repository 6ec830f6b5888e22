#include "moveable/geometry.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace moveable {

namespace {

int round_px(double v) { return static_cast<int>(std::lround(v)); }

std::int64_t cross(Point o, Point a, Point b) {
    return static_cast<std::int64_t>(a.x - o.x) * (b.y - o.y) -
           static_cast<std::int64_t>(a.y - o.y) * (b.x - o.x);
}

bool on_segment(Point p, Point a, Point b) {
    if (cross(a, b, p) != 0) return false;
    return p.x >= std::min(a.x, b.x) && p.x <= std::max(a.x, b.x) &&
           p.y >= std::min(a.y, b.y) && p.y <= std::max(a.y, b.y);
}

}  // namespace

double distance(Point a, Point b) {
    return std::hypot(static_cast<double>(a.x - b.x), static_cast<double>(a.y - b.y));
}

Point point_at(Point center, double angle, double radius) {
    return {center.x + round_px(radius * std::cos(angle)),
            center.y - round_px(radius * std::sin(angle))};
}

Point point_on_line(Point a, Point b, double ratio) {
    return {a.x + round_px(ratio * (b.x - a.x)), a.y + round_px(ratio * (b.y - a.y))};
}

double dist_to_segment(Point p, Point a, Point b) {
    const double vx = b.x - a.x;
    const double vy = b.y - a.y;
    const double len2 = vx * vx + vy * vy;
    if (len2 == 0.0) return distance(p, a);
    const double t = std::clamp(((p.x - a.x) * vx + (p.y - a.y) * vy) / len2, 0.0, 1.0);
    return std::hypot(a.x + t * vx - p.x, a.y + t * vy - p.y);
}

bool point_in_polygon(Point p, std::span<const Point> vertices) {
    const std::size_t n = vertices.size();
    if (n < 3) throw std::invalid_argument("point_in_polygon: polygon needs at least 3 vertices");

    bool inside = false;
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const Point a = vertices[i];
        const Point b = vertices[j];
        if (on_segment(p, a, b)) return true;
        // Half-open rule on y so that a vertex lying on the ray is counted once.
        if ((a.y > p.y) != (b.y > p.y)) {
            // x of the edge at height p.y compared without division
            const std::int64_t lhs = static_cast<std::int64_t>(p.x - a.x) * (b.y - a.y);
            const std::int64_t rhs = static_cast<std::int64_t>(b.x - a.x) * (p.y - a.y);
            if ((b.y > a.y) ? lhs < rhs : lhs > rhs) inside = !inside;
        }
    }
    return inside;
}

}  // namespace moveable
