#pragma once

#include "moveable/moveable_object.hpp"

namespace moveable {

// Ring moved by any inner point and resized by any point of either border.
//
// Node layout: [outer border circles][inner border circles][trapezoids]. The
// three counts are computed by redefine_contour() and stay fixed while a
// border is dragged, so the caught node keeps its meaning; the border
// circles spread apart during the drag and the counts are refreshed when the
// gesture ends.
class NRing : public MoveableBase<NRing> {
public:
    static constexpr int kMinRadialGap = 8;

    NRing(Point center, int inner_radius, int outer_radius, int small_radius = 7, int spacing = 10);

    Point center() const { return center_; }
    int inner_radius() const { return nr_inner_; }
    int outer_radius() const { return nr_outer_; }
    int small_radius() const { return nr_small_; }
    int spacing() const { return distance_neighbours_; }

    int nodes_on_outer() const { return n_outer_; }
    int nodes_on_inner() const { return n_inner_; }
    int polygon_nodes() const { return n_poly_; }

    // Recomputes the node counts from the current radii, then the contour.
    void redefine_contour();

    void move(Delta d) override;
    bool move_contour_point(std::size_t i, Delta d, Point mouse, MouseButton button) override;
    void on_release() override { redefine_contour(); }
    std::string_view type_tag() const override { return "nring"; }
    Rect bounds() const override;
    std::vector<RenderPrimitive> appearance() const override;

protected:
    Contour make_contour() const override;

private:
    Point center_;
    int nr_inner_;
    int nr_outer_;
    int nr_small_;
    int distance_neighbours_;
    int n_outer_ = 0;
    int n_inner_ = 0;
    int n_poly_ = 0;
};

}  // namespace moveable
