#pragma once

#include "moveable/moveable_object.hpp"

namespace moveable {

// Regular polygon moved by a single circular node, its inscribed circle.
// No resizing.
class RegularPolygon : public MoveableBase<RegularPolygon> {
public:
    // `inradius` is the radius of the inscribed circle; `angle` is the
    // direction of the first vertex.
    RegularPolygon(Point center, int inradius, int vertex_count, double angle);

    Point center() const { return center_; }
    int inradius() const { return inradius_; }
    int vertex_count() const { return vertex_count_; }
    double angle() const { return angle_; }
    std::vector<Point> vertices() const;

    void move(Delta d) override;
    bool move_contour_point(std::size_t i, Delta d, Point mouse, MouseButton button) override;
    std::string_view type_tag() const override { return "regular_polygon"; }
    Rect bounds() const override;
    std::vector<RenderPrimitive> appearance() const override;

protected:
    Contour make_contour() const override;

private:
    Point center_;
    int inradius_;
    int vertex_count_;
    double angle_;
};

}  // namespace moveable
