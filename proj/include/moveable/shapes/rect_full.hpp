#pragma once

#include "moveable/moveable_object.hpp"

namespace moveable {

// Rectangle moved by any inner point and resized by any border point.
//
// Node order sets hit priority: four corner circles, then four border strips
// (left, top, right, bottom), then one polygon covering the whole rectangle.
class RectFull : public MoveableBase<RectFull> {
public:
    static constexpr int kHalfStrip = 3;
    static constexpr int kCornerRadius = 6;

    RectFull(Rect rc, int min_width = 20, int min_height = 20);

    const Rect& rect() const { return rc_; }
    int min_width() const { return min_width_; }
    int min_height() const { return min_height_; }

    void move(Delta d) override;
    bool move_contour_point(std::size_t i, Delta d, Point mouse, MouseButton button) override;
    std::string_view type_tag() const override { return "rect_full"; }
    Rect bounds() const override { return rc_; }
    std::vector<RenderPrimitive> appearance() const override;

protected:
    Contour make_contour() const override;

private:
    Rect rc_;
    int min_width_;
    int min_height_;
};

}  // namespace moveable
