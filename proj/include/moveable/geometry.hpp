#pragma once

#include <algorithm>
#include <compare>
#include <span>

namespace moveable {

// Screen coordinates: integer pixels, y grows downward.
struct Point {
    int x = 0;
    int y = 0;

    friend constexpr bool operator==(Point, Point) = default;
    friend constexpr auto operator<=>(Point, Point) = default;
};

struct Delta {
    int dx = 0;
    int dy = 0;

    constexpr bool is_zero() const { return dx == 0 && dy == 0; }

    friend constexpr bool operator==(Delta, Delta) = default;
    friend constexpr Delta operator+(Delta a, Delta b) { return {a.dx + b.dx, a.dy + b.dy}; }
    friend constexpr Delta operator-(Delta a) { return {-a.dx, -a.dy}; }
};

constexpr Point operator+(Point p, Delta d) { return {p.x + d.dx, p.y + d.dy}; }
constexpr Point operator-(Point p, Delta d) { return {p.x - d.dx, p.y - d.dy}; }
constexpr Delta operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
constexpr Point& operator+=(Point& p, Delta d) { return p = p + d; }

// Axis-aligned rectangle in the usual GUI convention: right() and bottom()
// are one past the last covered pixel.
struct Rect {
    int x = 0;
    int y = 0;
    int width = 0;
    int height = 0;

    constexpr int left() const { return x; }
    constexpr int top() const { return y; }
    constexpr int right() const { return x + width; }
    constexpr int bottom() const { return y + height; }
    constexpr Point top_left() const { return {left(), top()}; }
    constexpr Point top_right() const { return {right(), top()}; }
    constexpr Point bottom_right() const { return {right(), bottom()}; }
    constexpr Point bottom_left() const { return {left(), bottom()}; }
    constexpr Point center() const { return {x + width / 2, y + height / 2}; }
    constexpr bool contains(Point p) const {
        return p.x >= left() && p.x < right() && p.y >= top() && p.y < bottom();
    }

    friend constexpr bool operator==(const Rect&, const Rect&) = default;
};

// Inclusive pixel extents of a set of sensitive areas.
struct Bounds {
    int min_x = 0;
    int min_y = 0;
    int max_x = 0;
    int max_y = 0;

    static constexpr Bounds of(Point p) { return {p.x, p.y, p.x, p.y}; }
    static constexpr Bounds around(Point c, int r) { return {c.x - r, c.y - r, c.x + r, c.y + r}; }

    constexpr int width() const { return max_x - min_x + 1; }
    constexpr int height() const { return max_y - min_y + 1; }
    constexpr Bounds united(const Bounds& o) const {
        return {std::min(min_x, o.min_x), std::min(min_y, o.min_y),
                std::max(max_x, o.max_x), std::max(max_y, o.max_y)};
    }

    friend constexpr bool operator==(const Bounds&, const Bounds&) = default;
};

double distance(Point a, Point b);

// Polar construction: angle 0 points right, positive angles turn
// counter-clockwise on screen (the y component is subtracted).
Point point_at(Point center, double angle, double radius);

// a + ratio * (b - a), rounded to the nearest pixel.
Point point_on_line(Point a, Point b, double ratio);

// Distance from p to the closed segment [a, b].
double dist_to_segment(Point p, Point a, Point b);

// Even-odd containment for a simple polygon; the boundary counts as inside.
// Throws std::invalid_argument for fewer than three vertices.
bool point_in_polygon(Point p, std::span<const Point> vertices);

}  // namespace moveable
