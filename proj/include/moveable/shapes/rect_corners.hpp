#pragma once

#include "moveable/moveable_object.hpp"

namespace moveable {

enum class CornerStyle {
    ShiftedSquares,  // small squares pushed 3 px outside the corners, explicit connections
    CornerCircles,   // circles of radius 6 exactly on the corners, auto-closed loop
};

// Rectangle moved by its border and resized by its four corners.
class RectCorners : public MoveableBase<RectCorners> {
public:
    static constexpr int kShift = 3;
    static constexpr int kCircleRadius = 6;

    RectCorners(Rect rc, CornerStyle style, int min_width = 20, int min_height = 20);

    const Rect& rect() const { return rc_; }
    CornerStyle style() const { return style_; }
    int min_width() const { return min_width_; }
    int min_height() const { return min_height_; }

    void move(Delta d) override;
    bool move_contour_point(std::size_t i, Delta d, Point mouse, MouseButton button) override;
    std::string_view type_tag() const override { return "rect_corners"; }
    Rect bounds() const override { return rc_; }
    std::vector<RenderPrimitive> appearance() const override;

protected:
    Contour make_contour() const override;

private:
    Rect rc_;
    CornerStyle style_;
    int min_width_;
    int min_height_;
};

}  // namespace moveable
