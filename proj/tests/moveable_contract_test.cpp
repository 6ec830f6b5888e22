#include "moveable/moveable_object.hpp"

#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "moveable/scene.hpp"
#include "moveable/shapes.hpp"
#include "sample_shapes.hpp"

namespace moveable {
namespace {

using testing::sample_shapes;

std::string state_of(const MoveableObject& o) { return shape_to_json(o).dump(); }

TEST(DefineContour, RectCornersFirstNodeSitsOutsideTheCorner) {
    const RectCorners r(Rect{100, 100, 100, 60}, CornerStyle::ShiftedSquares);
    EXPECT_EQ(r.contour().nodes()[0].center(), (Point{97, 97}));
}

TEST(DefineContour, TriangleHasOneNode) {
    const RegularPolygon tri({200, 150}, 50, 3, std::numbers::pi / 2);
    EXPECT_EQ(tri.contour().node_count(), 1U);
}

TEST(DefineContour, IsDeterministic) {
    for (auto& obj : sample_shapes()) {
        const Contour before = obj->contour();
        obj->define_contour();
        EXPECT_EQ(obj->contour(), before) << obj->type_tag();
    }
}

TEST(Move, TranslatesTheRectangle) {
    RectCorners r(Rect{100, 100, 100, 60}, CornerStyle::ShiftedSquares);
    r.move({10, 5});
    EXPECT_EQ(r.rect(), (Rect{110, 105, 100, 60}));
    r.move({0, 0});
    EXPECT_EQ(r.rect(), (Rect{110, 105, 100, 60}));
}

TEST(Move, ShiftsEveryGraphPoint) {
    const std::vector<Point> pts{{10, 10}, {50, 20}, {30, 70}, {0, 40}, {90, 90}};
    GraphObject g(pts, {5, 5, 5, 5, 5}, {"a", "b", "c", "d", "e"}, {{0, 1}});
    g.move({-7, 3});
    for (std::size_t i = 0; i < pts.size(); ++i) EXPECT_EQ(g.points()[i], (pts[i] + Delta{-7, 3}));
}

TEST(Move, IsAdditiveOnEveryShape) {
    std::mt19937 rng(1);
    std::uniform_int_distribution<int> c(-50, 50);
    auto a = sample_shapes();
    auto b = sample_shapes();
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (int k = 0; k < 20; ++k) {
            const Delta d1{c(rng), c(rng)}, d2{c(rng), c(rng)};
            a[i]->move(d1);
            a[i]->move(d2);
            b[i]->move(d1 + d2);
            ASSERT_EQ(state_of(*a[i]), state_of(*b[i])) << a[i]->type_tag();
        }
    }
}

TEST(Move, KeepsBoundingBoxSize) {
    std::mt19937 rng(2);
    std::uniform_int_distribution<int> c(-80, 80);
    for (auto& obj : sample_shapes()) {
        const Rect before = obj->bounds();
        for (int k = 0; k < 50; ++k) {
            obj->move({c(rng), c(rng)});
            ASSERT_EQ(obj->bounds().width, before.width) << obj->type_tag();
            ASSERT_EQ(obj->bounds().height, before.height) << obj->type_tag();
        }
    }
}

TEST(MoveContourPoint, RightTopCornerOfShiftedSquares) {
    RectCorners r(Rect{100, 100, 100, 60}, CornerStyle::ShiftedSquares);
    EXPECT_TRUE(r.move_contour_point(1, {5, -5}, {}, MouseButton::Left));
    EXPECT_EQ(r.rect(), (Rect{100, 95, 105, 65}));
}

TEST(MoveContourPoint, MinimumHeightRejectsVerticalPart) {
    RectCorners r(Rect{100, 100, 100, 60}, CornerStyle::ShiftedSquares, 20, 20);
    EXPECT_FALSE(r.move_contour_point(0, {0, 50}, {}, MouseButton::Left));
    EXPECT_EQ(r.rect(), (Rect{100, 100, 100, 60}));
    // Horizontal part still accepted on its own.
    EXPECT_TRUE(r.move_contour_point(0, {10, 50}, {}, MouseButton::Left));
    EXPECT_EQ(r.rect(), (Rect{110, 100, 90, 60}));
}

TEST(MoveContourPoint, SingleNodeMovesTheWholePolygon) {
    RegularPolygon tri({200, 150}, 50, 3, std::numbers::pi / 2);
    EXPECT_TRUE(tri.move_contour_point(0, {4, 4}, {}, MouseButton::Left));
    EXPECT_EQ(tri.center(), (Point{204, 154}));
}

TEST(MoveContourPoint, RightButtonIsIgnored) {
    for (auto& obj : sample_shapes()) {
        const std::string before = state_of(*obj);
        for (std::size_t i = 0; i < obj->contour().node_count(); ++i) {
            EXPECT_FALSE(obj->move_contour_point(i, {9, 9}, {0, 0}, MouseButton::Right)) << obj->type_tag();
        }
        EXPECT_EQ(state_of(*obj), before);
    }
}

TEST(MoveContourPoint, FalseLeavesStateUntouched) {
    std::mt19937 rng(4);
    std::uniform_int_distribution<int> c(-120, 120);
    for (auto& obj : sample_shapes()) {
        for (int k = 0; k < 2000; ++k) {
            const std::size_t n = obj->contour().node_count();
            const std::size_t i = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
            const Delta d{c(rng), c(rng)};
            const Rect b = obj->bounds();
            const Point mouse{b.x + c(rng) + b.width / 2, b.y + c(rng) + b.height / 2};
            const std::string before = state_of(*obj);
            if (!obj->move_contour_point(i, d, mouse, MouseButton::Left)) {
                ASSERT_EQ(state_of(*obj), before) << obj->type_tag() << " node " << i;
            } else {
                ASSERT_NE(state_of(*obj), before) << obj->type_tag() << " node " << i;
                obj->define_contour();
            }
            obj->on_release();
        }
    }
}

TEST(Clone, IsDeepAndIndependent) {
    for (auto& obj : sample_shapes()) {
        auto copy = obj->clone();
        EXPECT_EQ(state_of(*copy), state_of(*obj));
        EXPECT_EQ(copy->contour(), obj->contour());
        copy->move({13, -4});
        EXPECT_NE(state_of(*copy), state_of(*obj));
    }
}

}  // namespace
}  // namespace moveable
