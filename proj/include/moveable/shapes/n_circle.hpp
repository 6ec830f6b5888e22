#pragma once

#include "moveable/moveable_object.hpp"

namespace moveable {

// Number of nodes of spacing `spacing` needed around a circle of `radius`.
int nodes_on_circumference(int radius, int spacing);

// Circle moved by a big central node and resized by any border point.
//
// Node 0 covers the interior; nodes 1..n are small circles along the border,
// n depending on the circumference. The contour is rebuilt after every radius
// change, so border nodes always cover the border without gaps.
class NCircle : public MoveableBase<NCircle> {
public:
    NCircle(Point center, int radius, int small_radius = 7, int spacing = 10, int min_radius = 20);

    Point center() const { return center_; }
    int radius() const { return nr_big_; }
    int small_radius() const { return nr_small_; }
    int spacing() const { return distance_neighbours_; }
    int min_radius() const { return min_radius_; }
    int border_node_count() const { return nodes_on_circumference(nr_big_, distance_neighbours_); }

    void move(Delta d) override;
    bool move_contour_point(std::size_t i, Delta d, Point mouse, MouseButton button) override;
    std::string_view type_tag() const override { return "ncircle"; }
    Rect bounds() const override;
    std::vector<RenderPrimitive> appearance() const override;

protected:
    Contour make_contour() const override;

private:
    Point center_;
    int nr_big_;
    int nr_small_;
    int distance_neighbours_;
    int min_radius_;
};

}  // namespace moveable
