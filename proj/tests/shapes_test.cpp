#include "moveable/shapes.hpp"

#include <cmath>
#include <numbers>
#include <set>

#include <gtest/gtest.h>

#include "moveable/errors.hpp"

namespace moveable {
namespace {

constexpr auto L = MouseButton::Left;

TEST(RectCorners, CornerResizeAcceptsAxesIndependently) {
    RectCorners r(Rect{0, 0, 100, 60}, CornerStyle::CornerCircles, 20, 20);
    // Left-bottom corner: width would grow, height would drop below 20.
    EXPECT_TRUE(r.move_contour_point(3, {-10, -45}, {}, L));
    EXPECT_EQ(r.rect(), (Rect{-10, 0, 110, 60}));
}

TEST(RectCorners, CirclesSitOnTheCorners) {
    const RectCorners r(Rect{100, 80, 180, 120}, CornerStyle::CornerCircles);
    const auto& n = r.contour().nodes();
    ASSERT_EQ(n.size(), 4U);
    EXPECT_EQ(n[0].area, NodeArea(CircleArea{6}));
    EXPECT_EQ(r.contour().connections().size(), 4U);
}

TEST(RectCorners, RejectsTooSmallRectangles) {
    EXPECT_THROW(RectCorners(Rect{0, 0, 10, 60}, CornerStyle::CornerCircles, 20, 20), InvariantViolation);
}

TEST(RectEightNode, IndexingIsClockwiseFromLeftTop) {
    const RectEightNode r(Rect{100, 80, 200, 120}, ContourResize::Any);
    const auto& n = r.contour().nodes();
    ASSERT_EQ(n.size(), 8U);
    const Point expected[8] = {{100, 80}, {200, 80}, {300, 80}, {300, 140}, {300, 200}, {200, 200}, {100, 200}, {100, 140}};
    for (std::size_t i = 0; i < 8; ++i) {
        EXPECT_LE(std::abs(n[i].center().x - expected[i].x), 1) << i;
        EXPECT_LE(std::abs(n[i].center().y - expected[i].y), 1) << i;
    }
    EXPECT_EQ(n[0].cursor, CursorHint::SizeNWSE);
    EXPECT_EQ(n[2].cursor, CursorHint::SizeNESW);
    EXPECT_EQ(n[1].freedom, MovementFreedom::NS);
    EXPECT_EQ(n[3].freedom, MovementFreedom::WE);
}

TEST(RectEightNode, NsModeGatesCornersToHeight) {
    RectEightNode r(Rect{100, 80, 200, 120}, ContourResize::NS);
    EXPECT_TRUE(r.move_contour_point(0, {10, -10}, {}, L));
    EXPECT_EQ(r.rect(), (Rect{100, 70, 200, 130}));
}

TEST(RectEightNode, AlwaysEightNodes) {
    for (auto mode : {ContourResize::None, ContourResize::NS, ContourResize::WE, ContourResize::Any}) {
        const RectEightNode r(Rect{0, 0, 60, 40}, mode);
        EXPECT_EQ(r.contour().node_count(), 8U);
    }
}

TEST(RectEightNode, WeModeMirrorsNsMode) {
    const RectEightNode r(Rect{0, 0, 60, 40}, ContourResize::WE);
    EXPECT_EQ(r.contour().node_freedom(1), MovementFreedom::None);
    EXPECT_EQ(r.contour().node_freedom(5), MovementFreedom::None);
    EXPECT_EQ(r.contour().node_freedom(3), MovementFreedom::WE);
    EXPECT_EQ(r.contour().node_freedom(0), MovementFreedom::WE);
}

TEST(GraphObject, NodeDragMovesOnlyThatPoint) {
    GraphObject g({{0, 0}, {50, 0}, {50, 50}}, {5, 6, 7}, {"a", "b", "c"}, {{0, 1}, {1, 2}});
    EXPECT_TRUE(g.move_contour_point(1, {3, 4}, {}, L));
    EXPECT_EQ(g.points()[0], (Point{0, 0}));
    EXPECT_EQ(g.points()[1], (Point{53, 4}));
    EXPECT_EQ(g.contour().connections().size(), 2U);
}

TEST(GraphObject, RejectsInconsistentInput) {
    EXPECT_THROW(GraphObject({{0, 0}, {5, 5}}, {5}, {"a", "b"}, {}), InvariantViolation);
    EXPECT_THROW(GraphObject({{0, 0}, {5, 5}}, {5, 5}, {"a", "b"}, {{0, 2}}), InvariantViolation);
}

TEST(RegularPolygon, SingleInscribedCircle) {
    const RegularPolygon sq({100, 100}, 40, 4, 0.0);
    const auto& n = sq.contour().nodes();
    ASSERT_EQ(n.size(), 1U);
    EXPECT_EQ(n[0].center(), (Point{100, 100}));
    EXPECT_EQ(n[0].area, NodeArea(CircleArea{40}));
    EXPECT_TRUE(sq.contour().connections().empty());
}

TEST(RectSolidMove, TwoNodesOneWideConnection) {
    const RectSolidMove r(Rect{80, 100, 240, 80});
    const Contour& c = r.contour();
    ASSERT_EQ(c.node_count(), 2U);
    ASSERT_EQ(c.connections().size(), 1U);
    EXPECT_EQ(c.sensitivity_of(c.connections()[0]), 40);
    EXPECT_EQ(c.nodes()[0].area, NodeArea(SquareArea{40}));
    EXPECT_FALSE(c.nodes()[0].clearance);
    EXPECT_EQ(c.nodes()[0].cursor, CursorHint::SizeAll);
}

TEST(RectTiled, OnlyTheLastTwoNodesOverlap) {
    const RectTiled r(Rect{60, 120, 280, 50});
    const Contour& c = r.contour();
    EXPECT_TRUE(c.connections().empty());
    ASSERT_EQ(c.node_count(), 6U);  // ceil(280 / 50)
    for (std::size_t i = 0; i + 1 < c.node_count(); ++i) {
        const int gap = c.nodes()[i + 1].center().x - c.nodes()[i].center().x;
        if (i + 2 < c.node_count()) {
            EXPECT_EQ(gap, 50);
        } else {
            EXPECT_LT(gap, 50);
        }
    }
    EXPECT_EQ(c.nodes().back().center().x + 25, 339);
}

TEST(RectTiled, VerticalRectanglesTileDownwards) {
    const RectTiled r(Rect{0, 0, 30, 100});
    for (const Node& n : r.contour().nodes()) EXPECT_EQ(n.center().x, 15);
}

TEST(ScrewNut, SixTrapezoids) {
    const ScrewNut s({200, 150}, 40, 90, 0.0);
    const Contour& c = s.contour();
    ASSERT_EQ(c.node_count(), 6U);
    EXPECT_TRUE(c.connections().empty());
    for (const Node& n : c.nodes()) {
        const auto* poly = std::get_if<PolygonArea>(&n.area);
        ASSERT_NE(poly, nullptr);
        EXPECT_EQ(poly->vertices.size(), 4U);
        EXPECT_FALSE(n.clearance);
    }
    EXPECT_FALSE(node_contains(c.nodes()[0], {200, 150}));
    EXPECT_THROW(ScrewNut({0, 0}, 90, 40, 0.0), InvariantViolation);
}

TEST(RectFull, NodeOrderAndCursors) {
    const RectFull r(Rect{100, 80, 200, 140});
    const auto& n = r.contour().nodes();
    ASSERT_EQ(n.size(), 9U);
    for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(n[i].area, NodeArea(CircleArea{6}));
    EXPECT_EQ(n[0].cursor, CursorHint::SizeNWSE);
    EXPECT_EQ(n[1].cursor, CursorHint::SizeNESW);
    EXPECT_EQ(n[2].cursor, CursorHint::SizeNWSE);
    EXPECT_EQ(n[3].cursor, CursorHint::SizeNESW);
    EXPECT_EQ(n[4].cursor, CursorHint::SizeWE);
    EXPECT_EQ(n[5].cursor, CursorHint::SizeNS);
    EXPECT_EQ(n[6].cursor, CursorHint::SizeWE);
    EXPECT_EQ(n[7].cursor, CursorHint::SizeNS);
    EXPECT_EQ(n[8].cursor, CursorHint::SizeAll);
    EXPECT_TRUE(std::holds_alternative<PolygonArea>(n[8].area));
}

TEST(RectFull, InteriorMovesAndStripsResize) {
    RectFull r(Rect{100, 80, 200, 140});
    EXPECT_TRUE(r.move_contour_point(8, {5, 6}, {}, L));
    EXPECT_EQ(r.rect(), (Rect{105, 86, 200, 140}));
    EXPECT_TRUE(r.move_contour_point(4, {-10, 0}, {}, L));
    EXPECT_EQ(r.rect(), (Rect{95, 86, 210, 140}));
    EXPECT_TRUE(r.move_contour_point(7, {0, 10}, {}, L));
    EXPECT_EQ(r.rect(), (Rect{95, 86, 210, 150}));
}

TEST(NCircle, BorderNodeCount) {
    EXPECT_EQ(nodes_on_circumference(100, 10), 63);
    const NCircle c({200, 150}, 100);
    EXPECT_EQ(c.contour().node_count(), 64U);
    EXPECT_EQ(c.contour().nodes()[0].area, NodeArea(CircleArea{100 - 7 + 1}));
}

TEST(NCircle, ResizeFollowsTheMouseDistance) {
    NCircle c({0, 0}, 40, 7, 10, 10);
    EXPECT_TRUE(c.move_contour_point(1, {0, 0}, {30, 40}, L));
    EXPECT_EQ(c.radius(), 50);
    EXPECT_FALSE(c.move_contour_point(1, {0, 0}, {50, 0}, L));
    EXPECT_FALSE(c.move_contour_point(1, {0, 0}, {5, 0}, L));
    EXPECT_EQ(c.radius(), 50);
}

TEST(NCircle, CentralNodeMoves) {
    NCircle c({0, 0}, 40);
    EXPECT_TRUE(c.move_contour_point(0, {3, -2}, {}, L));
    EXPECT_EQ(c.center(), (Point{3, -2}));
}

TEST(NRing, Counts) {
    const NRing r({200, 150}, 50, 100);
    EXPECT_EQ(r.nodes_on_outer(), 63);
    EXPECT_EQ(r.polygon_nodes(), 32);
    EXPECT_EQ(r.nodes_on_inner(), 31);
    EXPECT_EQ(r.contour().node_count(), 63U + 31U + 32U);
}

TEST(NRing, RedefineIsIdempotent) {
    NRing r({200, 150}, 50, 100);
    const Contour before = r.contour();
    r.redefine_contour();
    r.redefine_contour();
    EXPECT_EQ(r.contour(), before);
}

TEST(NRing, CountsFrozenUntilRelease) {
    NRing r({0, 0}, 50, 100);
    ASSERT_TRUE(r.move_contour_point(0, {}, {200, 0}, L));
    EXPECT_EQ(r.outer_radius(), 200);
    r.define_contour();
    EXPECT_EQ(r.nodes_on_outer(), 63);
    EXPECT_EQ(r.contour().node_count(), 126U);
    r.on_release();
    EXPECT_EQ(r.nodes_on_outer(), nodes_on_circumference(200, 10));
    EXPECT_NE(r.contour().node_count(), 126U);
}

TEST(NRing, InnerBorderStaysInsideOuter) {
    NRing r({0, 0}, 50, 100);
    const std::size_t inner = 63;
    EXPECT_TRUE(r.move_contour_point(inner, {}, {150, 0}, L));
    EXPECT_EQ(r.inner_radius(), 100 - NRing::kMinRadialGap);
    EXPECT_FALSE(r.move_contour_point(inner, {}, {150, 0}, L));
    EXPECT_LT(r.inner_radius(), r.outer_radius());
}

TEST(NRing, OuterBorderStaysOutsideInner) {
    NRing r({0, 0}, 50, 100);
    EXPECT_TRUE(r.move_contour_point(0, {}, {10, 0}, L));
    EXPECT_EQ(r.outer_radius(), 50 + NRing::kMinRadialGap);
}

TEST(NRing, TrapezoidMovesTheRing) {
    NRing r({0, 0}, 50, 100);
    EXPECT_TRUE(r.move_contour_point(126 - 1, {4, 5}, {}, L));
    EXPECT_EQ(r.center(), (Point{4, 5}));
    EXPECT_EQ(r.outer_radius(), 100);
}

TEST(NRing, RejectsInvertedRadii) { EXPECT_THROW(NRing({0, 0}, 90, 50), InvariantViolation); }

TEST(ControlStub, InteriorIsNeverSensitive) {
    const ControlStub c("c", Rect{80, 60, 250, 80}, ContourResize::Any, 250, 500, 80, 240);
    for (int y = 60; y < 140; ++y) {
        for (int x = 80; x < 330; ++x) ASSERT_TRUE(is_miss(c.contour().hit_test({x, y}))) << x << "," << y;
    }
}

TEST(ControlStub, SideHandlesGrowWithTheControl) {
    EXPECT_EQ(ControlStub::side_handle_length(20), 12);
    EXPECT_EQ(ControlStub::side_handle_length(400), 100);
}

TEST(ControlStub, ClampsToTheRegisteredRanges) {
    ControlStub c("c", Rect{80, 60, 250, 80}, ContourResize::Any, 250, 500, 80, 240);
    EXPECT_TRUE(c.move_contour_point(4, {400, 400}, {}, L));
    EXPECT_EQ(c.rect(), (Rect{80, 60, 500, 240}));
    EXPECT_TRUE(c.move_contour_point(0, {400, 400}, {}, L));
    EXPECT_EQ(c.rect(), (Rect{330, 220, 250, 80}));
    EXPECT_FALSE(c.move_contour_point(0, {10, 10}, {}, L));
}

TEST(ControlStub, NonResizableControlStillMovesByItsBorder) {
    const ControlStub c("c", Rect{80, 60, 250, 80}, ContourResize::None, 250, 500, 80, 240);
    EXPECT_TRUE(c.contour().render_primitives().size() == c.contour().connections().size());
    EXPECT_TRUE(std::holds_alternative<ConnectionHit>(c.contour().hit_test({150, 56})));
    for (std::size_t i = 0; i < 8; ++i) EXPECT_EQ(c.contour().node_freedom(i), MovementFreedom::None);
}

TEST(ControlStub, AllCornersExistInOneDirectionModes) {
    const ControlStub c("c", Rect{80, 60, 250, 80}, ContourResize::NS, 250, 500, 80, 240);
    for (std::size_t i : {0U, 2U, 4U, 6U}) EXPECT_EQ(c.contour().node_freedom(i), MovementFreedom::NS);
    EXPECT_EQ(c.contour().node_freedom(3), MovementFreedom::None);
    EXPECT_EQ(c.contour().node_freedom(7), MovementFreedom::None);
}

TEST(ControlStub, RejectsSizeOutsideRanges) {
    EXPECT_THROW(ControlStub("c", Rect{0, 0, 100, 80}, ContourResize::Any, 250, 500, 80, 240), InvariantViolation);
    EXPECT_THROW(ControlStub("c", Rect{0, 0, 300, 80}, ContourResize::Any, 250, 200, 80, 240), InvariantViolation);
}

}  // namespace
}  // namespace moveable
