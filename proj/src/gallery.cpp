#include "moveable/gallery.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "moveable/shapes.hpp"

namespace moveable {

namespace {

// Builds a trace against a live Mover so every gesture starts on the current
// position of its node or connection.
class Tracer {
public:
    explicit Tracer(const Scene& scene) : mover_(build_mover(scene)) {}

    Point node_center(std::size_t obj, std::size_t node) const {
        return mover_[obj].contour().nodes().at(node).center();
    }

    Point connection_middle(std::size_t obj, std::size_t conn) const {
        const Contour& c = mover_[obj].contour();
        const Connection& k = c.connections().at(conn);
        return point_on_line(c.nodes().at(k.a).center(), c.nodes().at(k.b).center(), 0.5);
    }

    void drag_node(std::size_t obj, std::size_t node, Delta total, MouseButton b = MouseButton::Left) {
        drag(node_center(obj, node), total, obj, GrabNode{node}, b);
    }

    void drag_connection(std::size_t obj, std::size_t conn, Delta total, MouseButton b = MouseButton::Left) {
        drag(connection_middle(obj, conn), total, obj, GrabConnection{conn}, b);
    }

    // Radial drag of a border node, away from (positive) or towards `center`.
    void drag_radially(std::size_t obj, std::size_t node, Point center, int amount) {
        const Point p = node_center(obj, node);
        const double len = distance(center, p);
        const Delta d{static_cast<int>(std::lround((p.x - center.x) * amount / len)),
                      static_cast<int>(std::lround((p.y - center.y) * amount / len))};
        drag(p, d, obj, GrabNode{node}, MouseButton::Left);
    }

    // Only valid until the next gesture: the Mover replaces resized objects.
    const MoveableObject& object(std::size_t obj) const { return mover_[obj]; }

    std::vector<TraceEvent> take() { return std::move(events_); }

private:
    static constexpr int kSteps = 4;

    void drag(Point from, Delta total, std::size_t obj, GrabKind grab, MouseButton b) {
        push(TraceEvent::down(from, b));
        const auto* c = std::get_if<Caught>(&mover_.state());
        if (c == nullptr || c->object != obj || c->grab != grab) {
            throw std::logic_error("gallery trace does not grab the intended element");
        }
        Point last = from;
        for (int s = 1; s <= kSteps; ++s) {
            last = {from.x + total.dx * s / kSteps, from.y + total.dy * s / kSteps};
            push(TraceEvent::move(last));
        }
        push(TraceEvent::up(last));
    }

    void push(const TraceEvent& ev) {
        switch (ev.kind) {
            case EventKind::Down: mover_.catch_at(ev.at, ev.button); break;
            case EventKind::Move: mover_.move(ev.at); break;
            case EventKind::Up: mover_.release(); break;
        }
        events_.push_back(ev);
    }

    Mover mover_;
    std::vector<TraceEvent> events_;
};

constexpr WorkArea kSmall{400, 300};
const ContainmentPolicy kPolicy = ContainmentPolicy::partly_visible(16);

GalleryCase make_case(int number, std::string name, std::string title, Scene scene) {
    GalleryCase c;
    c.number = number;
    c.name = std::move(name);
    c.title = std::move(title);
    c.scene = std::move(scene);
    return c;
}

}  // namespace

std::vector<GalleryCase> gallery_cases() {
    std::vector<GalleryCase> out;

    {
        Scene s(kSmall, kPolicy);
        s.emplace<RectCorners>(Rect{100, 100, 100, 60}, CornerStyle::ShiftedSquares);
        auto c = make_case(1, "rect_corners_squares", "rectangle, squares at the corners", std::move(s));
        Tracer t(c.scene);
        t.drag_node(0, 2, {30, 20});
        t.drag_node(0, 0, {-90, 0});
        t.drag_connection(0, 0, {40, 30});
        c.trace = t.take();
        out.push_back(std::move(c));
    }
    {
        Scene s(kSmall, kPolicy);
        s.emplace<RectCorners>(Rect{100, 80, 180, 120}, CornerStyle::CornerCircles);
        auto c = make_case(2, "rect_corners_circles", "rectangle, circles on the corners", std::move(s));
        Tracer t(c.scene);
        t.drag_node(0, 0, {-20, -10});
        t.drag_connection(0, 1, {40, 30});
        c.trace = t.take();
        out.push_back(std::move(c));
    }
    {
        Scene s(kSmall, kPolicy);
        s.emplace<RectEightNode>(Rect{100, 80, 200, 120}, ContourResize::Any);
        auto c = make_case(3, "rect_eight_node", "rectangle, eight resize handles", std::move(s));
        Tracer t(c.scene);
        t.drag_node(0, 4, {30, 20});
        t.drag_node(0, 1, {0, -15});
        t.drag_node(0, 7, {40, 0});
        t.drag_connection(0, 0, {-30, 20});
        c.trace = t.take();
        out.push_back(std::move(c));
    }
    {
        Scene s(kSmall, kPolicy);
        s.emplace<GraphObject>(std::vector<Point>{{80, 80}, {200, 60}, {300, 120}, {220, 220}, {100, 200}},
                               std::vector<int>{8, 10, 8, 12, 8},
                               std::vector<std::string>{"red", "blue", "green", "orange", "purple"},
                               std::vector<GraphLink>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {1, 3}});
        auto c = make_case(4, "graph", "graph with draggable vertices", std::move(s));
        Tracer t(c.scene);
        t.drag_node(0, 2, {20, -30});
        t.drag_connection(0, 5, {30, 20});
        t.drag_connection(0, 0, {-20, 10}, MouseButton::Right);
        c.trace = t.take();
        out.push_back(std::move(c));
    }
    {
        Scene s(kSmall, kPolicy);
        s.emplace<RegularPolygon>(Point{200, 150}, 50, 3, std::numbers::pi / 2);
        auto c = make_case(5, "regular_polygon", "triangle moved by its inscribed circle", std::move(s));
        Tracer t(c.scene);
        t.drag_node(0, 0, {50, 30});
        c.trace = t.take();
        out.push_back(std::move(c));
    }
    {
        Scene s(kSmall, kPolicy);
        s.emplace<RectSolidMove>(Rect{80, 100, 240, 80});
        auto c = make_case(6, "rect_solid", "rectangle moved by any inner point", std::move(s));
        Tracer t(c.scene);
        t.drag_node(0, 0, {30, -20});
        t.drag_connection(0, 0, {-20, 40});
        c.trace = t.take();
        out.push_back(std::move(c));
    }
    {
        Scene s(kSmall, kPolicy);
        s.emplace<RectTiled>(Rect{60, 120, 280, 50});
        auto c = make_case(7, "rect_tiled", "rectangle covered by square nodes", std::move(s));
        Tracer t(c.scene);
        t.drag_node(0, 3, {20, 40});
        c.trace = t.take();
        out.push_back(std::move(c));
    }
    {
        Scene s(kSmall, kPolicy);
        s.emplace<ScrewNut>(Point{200, 150}, 40, 90, 0.0);
        auto c = make_case(8, "screw_nut", "hexagonal nut moved by its sides", std::move(s));
        Tracer t(c.scene);
        t.drag_node(0, 2, {-30, 20});
        c.trace = t.take();
        out.push_back(std::move(c));
    }
    {
        Scene s(kSmall, kPolicy);
        s.emplace<RectFull>(Rect{100, 80, 200, 140});
        auto c = make_case(9, "rect_full", "rectangle resized by any border point", std::move(s));
        Tracer t(c.scene);
        t.drag_node(0, 2, {30, 20});
        t.drag_node(0, 4, {-20, 0});
        t.drag_node(0, 8, {20, 10});
        c.trace = t.take();
        out.push_back(std::move(c));
    }
    {
        Scene s(kSmall, kPolicy);
        s.emplace<NCircle>(Point{200, 150}, 100);
        auto c = make_case(10, "ncircle", "circle resized by any border point", std::move(s));
        Tracer t(c.scene);
        t.drag_radially(0, 5, {200, 150}, 30);
        t.drag_node(0, 0, {-40, 20});
        c.trace = t.take();
        out.push_back(std::move(c));
    }
    {
        Scene s(kSmall, kPolicy);
        s.emplace<NRing>(Point{200, 150}, 50, 100);
        auto c = make_case(11, "nring", "ring resized by either border", std::move(s));
        Tracer t(c.scene);
        t.drag_radially(0, 0, {200, 150}, 20);
        // Node counts change on release, so indices are taken from the live ring.
        const auto first_inner = [&t] {
            return static_cast<std::size_t>(dynamic_cast<const NRing&>(t.object(0)).nodes_on_outer());
        };
        const auto first_trapezoid = [&t] {
            const auto& ring = dynamic_cast<const NRing&>(t.object(0));
            return static_cast<std::size_t>(ring.nodes_on_outer() + ring.nodes_on_inner());
        };
        t.drag_radially(0, first_inner() + 3, {200, 150}, -10);
        t.drag_node(0, first_trapezoid() + 2, {30, 10});
        c.trace = t.take();
        out.push_back(std::move(c));
    }
    {
        Scene s(WorkArea{700, 400}, kPolicy);
        s.emplace<ControlStub>("listInfo", Rect{80, 60, 250, 80}, ContourResize::Any, 250, 500, 80, 240);
        auto c = make_case(12, "control", "control resized and moved by its frame", std::move(s));
        Tracer t(c.scene);
        t.drag_node(0, 4, {300, 200});
        t.drag_node(0, 7, {300, 0});
        t.drag_connection(0, 1, {50, 30});
        c.trace = t.take();
        out.push_back(std::move(c));
    }
    return out;
}

Scene combined_gallery() {
    Scene s(WorkArea{1200, 800}, kPolicy);
    s.emplace<RectCorners>(Rect{30, 40, 100, 60}, CornerStyle::ShiftedSquares);
    s.emplace<RectCorners>(Rect{180, 40, 140, 80}, CornerStyle::CornerCircles);
    s.emplace<RectEightNode>(Rect{370, 40, 160, 90}, ContourResize::Any);
    s.emplace<GraphObject>(std::vector<Point>{{600, 50}, {700, 40}, {760, 110}, {650, 150}},
                           std::vector<int>{8, 10, 8, 12}, std::vector<std::string>{"red", "blue", "green", "orange"},
                           std::vector<GraphLink>{{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    s.emplace<RegularPolygon>(Point{900, 100}, 50, 3, std::numbers::pi / 2);
    s.emplace<RectSolidMove>(Rect{1000, 60, 160, 60});
    s.emplace<RectTiled>(Rect{30, 240, 240, 50});
    s.emplace<ScrewNut>(Point{420, 300}, 40, 90, 0.0);
    s.emplace<RectFull>(Rect{580, 220, 180, 120});
    s.emplace<NCircle>(Point{950, 320}, 100);
    s.emplace<NRing>(Point{200, 560}, 50, 100);
    s.emplace<ControlStub>("listInfo", Rect{500, 520, 250, 80}, ContourResize::Any, 250, 500, 80, 240);
    return s;
}

std::string case_stem(const GalleryCase& c) {
    char buf[8];
    std::snprintf(buf, sizeof buf, "case%02d_", c.number);
    return buf + c.name;
}

}  // namespace moveable
