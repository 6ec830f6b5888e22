#pragma once

#include "moveable/moveable_object.hpp"

namespace moveable {

// Hexagonal nut moved by any inner point; its contour is six trapezoids
// between the inner and outer hexagons.
class ScrewNut : public MoveableBase<ScrewNut> {
public:
    ScrewNut(Point center, int inner_radius, int outer_radius, double angle);

    Point center() const { return center_; }
    int inner_radius() const { return r_inner_; }
    int outer_radius() const { return r_outer_; }
    double angle() const { return angle_; }
    std::vector<Point> inner_vertices() const;
    std::vector<Point> outer_vertices() const;

    void move(Delta d) override;
    bool move_contour_point(std::size_t i, Delta d, Point mouse, MouseButton button) override;
    std::string_view type_tag() const override { return "screw_nut"; }
    Rect bounds() const override;
    std::vector<RenderPrimitive> appearance() const override;

protected:
    Contour make_contour() const override;

private:
    std::vector<Point> hexagon(int radius) const;

    Point center_;
    int r_inner_;
    int r_outer_;
    double angle_;
};

}  // namespace moveable
