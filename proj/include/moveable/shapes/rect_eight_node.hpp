#pragma once

#include "moveable/moveable_object.hpp"
#include "moveable/shapes/contour_resize.hpp"

namespace moveable {

// Rectangle with handles on the corners and side midpoints. The contour
// always has eight nodes; handles the resize mode forbids keep their place
// but get a null area.
class RectEightNode : public MoveableBase<RectEightNode> {
public:
    RectEightNode(Rect rc, ContourResize resize, int min_width = 20, int min_height = 20);

    const Rect& rect() const { return rc_; }
    ContourResize resize() const { return resize_; }
    int min_width() const { return min_width_; }
    int min_height() const { return min_height_; }

    void move(Delta d) override;
    bool move_contour_point(std::size_t i, Delta d, Point mouse, MouseButton button) override;
    std::string_view type_tag() const override { return "rect_eight_node"; }
    Rect bounds() const override { return rc_; }
    std::vector<RenderPrimitive> appearance() const override;

protected:
    Contour make_contour() const override;

private:
    Rect rc_;
    ContourResize resize_;
    int min_width_;
    int min_height_;
};

}  // namespace moveable
