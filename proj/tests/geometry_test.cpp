#include "moveable/geometry.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

namespace moveable {
namespace {

TEST(Distance, PythagoreanTriple) { EXPECT_DOUBLE_EQ(distance({0, 0}, {3, 4}), 5.0); }

TEST(Distance, SamePointIsZero) { EXPECT_DOUBLE_EQ(distance({7, 7}, {7, 7}), 0.0); }

TEST(Distance, DiagonalMatchesSqrt) { EXPECT_NEAR(distance({0, 0}, {1, 1}), std::sqrt(2.0), 1e-9); }

TEST(Distance, IsAMetric) {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> c(-1000, 1000);
    for (int i = 0; i < 2000; ++i) {
        const Point a{c(rng), c(rng)}, b{c(rng), c(rng)}, p{c(rng), c(rng)};
        EXPECT_DOUBLE_EQ(distance(a, b), distance(b, a));
        EXPECT_LE(distance(a, b), distance(a, p) + distance(p, b) + 1e-9);
        EXPECT_GE(distance(a, b), 0.0);
    }
}

TEST(PointAt, AxisAligned) {
    EXPECT_EQ(point_at({100, 100}, 0, 50), (Point{150, 100}));
    EXPECT_EQ(point_at({100, 100}, std::numbers::pi / 2, 50), (Point{100, 50}));
}

// Long double trig, rounded to nearest.
Point polar_oracle(Point c, long double angle, long double r) {
    return {static_cast<int>(c.x + std::llround(r * std::cos(angle))),
            static_cast<int>(c.y - std::llround(r * std::sin(angle)))};
}

TEST(PointAt, ThirtyDegrees) {
    const Point expected = polar_oracle({0, 0}, std::numbers::pi_v<long double> / 6, 100);
    ASSERT_EQ(expected, (Point{87, -50}));
    EXPECT_EQ(point_at({0, 0}, std::numbers::pi / 6, 100), expected);
}

TEST(PointAt, WithinOnePixelOfExactPosition) {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> ang(-10, 10), rad(0, 500);
    for (int i = 0; i < 5000; ++i) {
        const double a = ang(rng), r = rad(rng);
        const Point p = point_at({20, -30}, a, r);
        EXPECT_LE(std::abs(p.x - (20 + r * std::cos(a))), 0.5 + 1e-9);
        EXPECT_LE(std::abs(p.y - (-30 - r * std::sin(a))), 0.5 + 1e-9);
    }
}

TEST(PointOnLine, MidpointAndStart) {
    EXPECT_EQ(point_on_line({0, 0}, {10, 10}, 0.5), (Point{5, 5}));
    EXPECT_EQ(point_on_line({0, 0}, {10, 10}, 0.0), (Point{0, 0}));
}

TEST(PointOnLine, RationalOracle) {
    // 2 + 3/10 * 10 = 5, 0 + 3/10 * 20 = 6, both exact.
    const int num = 3, den = 10;
    const Point a{2, 0}, b{12, 20};
    const Point expected{a.x + (b.x - a.x) * num / den, a.y + (b.y - a.y) * num / den};
    ASSERT_EQ(expected, (Point{5, 6}));
    EXPECT_EQ(point_on_line(a, b, 0.3), expected);
}

TEST(DistToSegment, PerpendicularAndClamped) {
    EXPECT_DOUBLE_EQ(dist_to_segment({5, 3}, {0, 0}, {10, 0}), 3.0);
    EXPECT_DOUBLE_EQ(dist_to_segment({-4, 3}, {0, 0}, {10, 0}), 5.0);
}

TEST(DistToSegment, DegenerateSegmentIsPointDistance) {
    EXPECT_DOUBLE_EQ(dist_to_segment({3, 4}, {0, 0}, {0, 0}), 5.0);
}

double sampled_segment_distance(Point p, Point a, Point b, int samples) {
    double best = INFINITY;
    for (int i = 0; i <= samples; ++i) {
        const double t = static_cast<double>(i) / samples;
        best = std::min(best, std::hypot(a.x + t * (b.x - a.x) - p.x, a.y + t * (b.y - a.y) - p.y));
    }
    return best;
}

TEST(DistToSegment, SamplingOracle) {
    const double oracle = sampled_segment_distance({6, 7}, {1, 2}, {9, 4}, 1'000'000);
    EXPECT_NEAR(oracle, 3.638034, 1e-5);
    EXPECT_NEAR(dist_to_segment({6, 7}, {1, 2}, {9, 4}), oracle, 1e-3);
}

TEST(DistToSegment, NeverExceedsEndpointDistances) {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> c(-200, 200);
    for (int i = 0; i < 3000; ++i) {
        const Point p{c(rng), c(rng)}, a{c(rng), c(rng)}, b{c(rng), c(rng)};
        EXPECT_LE(dist_to_segment(p, a, b), std::min(distance(p, a), distance(p, b)) + 1e-9);
    }
}

TEST(PointInPolygon, InteriorAndBoundary) {
    const std::vector<Point> sq{{0, 0}, {10, 0}, {10, 10}, {0, 10}};
    EXPECT_TRUE(point_in_polygon({5, 5}, sq));
    EXPECT_TRUE(point_in_polygon({10, 5}, sq));
    EXPECT_TRUE(point_in_polygon({0, 0}, sq));
    EXPECT_FALSE(point_in_polygon({11, 5}, sq));
}

TEST(PointInPolygon, RejectsDegenerate) {
    const std::vector<Point> two{{0, 0}, {1, 1}};
    EXPECT_THROW((void)point_in_polygon({0, 0}, two), std::invalid_argument);
}

// Convex polygon given counter-clockwise in math orientation: inside iff on
// the non-negative side of every edge.
bool half_plane_oracle(Point p, const std::vector<Point>& v) {
    bool all_pos = true, all_neg = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point a = v[i], b = v[(i + 1) % v.size()];
        const long long cross =
            static_cast<long long>(b.x - a.x) * (p.y - a.y) - static_cast<long long>(b.y - a.y) * (p.x - a.x);
        all_pos &= cross >= 0;
        all_neg &= cross <= 0;
    }
    return all_pos || all_neg;
}

TEST(PointInPolygon, TriangleMatchesHalfPlaneOracle) {
    const std::vector<Point> tri{{0, 0}, {20, 0}, {0, 20}};
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> c(-5, 25);
    for (int i = 0; i < 10'000; ++i) {
        const Point p{c(rng), c(rng)};
        ASSERT_EQ(point_in_polygon(p, tri), half_plane_oracle(p, tri)) << p.x << "," << p.y;
    }
}

TEST(PointInPolygon, RandomConvexPolygonsMatchOracle) {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> c(-60, 60);
    std::uniform_int_distribution<int> nv(3, 9);
    for (int k = 0; k < 50; ++k) {
        std::vector<Point> v;
        const int n = nv(rng);
        for (int i = 0; i < n; ++i) v.push_back(point_at({0, 0}, 2 * std::numbers::pi * i / n + k, 40));
        for (int i = 0; i < 400; ++i) {
            const Point p{c(rng), c(rng)};
            ASSERT_EQ(point_in_polygon(p, v), half_plane_oracle(p, v));
        }
    }
}

TEST(Rect, ExclusiveFarEdges) {
    const Rect r{10, 20, 30, 40};
    EXPECT_EQ(r.right(), 40);
    EXPECT_EQ(r.bottom(), 60);
    EXPECT_TRUE(r.contains({39, 59}));
    EXPECT_FALSE(r.contains({40, 59}));
}

}  // namespace
}  // namespace moveable
