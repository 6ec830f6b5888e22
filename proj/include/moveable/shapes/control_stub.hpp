#pragma once

#include <string>

#include "moveable/moveable_object.hpp"
#include "moveable/shapes/contour_resize.hpp"

namespace moveable {

// Stand-in for a window-system control. Its inside belongs to the control's
// own mouse handling, so the whole contour lies on a frame just outside the
// rectangle: enlarged corner squares, side handles that grow with the control,
// and connections along the frame for moving.
class ControlStub : public MoveableBase<ControlStub> {
public:
    static constexpr int kFrameGap = 4;          // frame line distance outside the control
    static constexpr int kBandHalf = 3;          // half thickness of side handles and frame strips
    static constexpr int kCornerHalf = 5;
    static constexpr int kCornerShift = 2;       // corner squares pushed outward along the diagonal
    static constexpr int kMinSideHandle = 12;

    ControlStub(std::string id, Rect rc, ContourResize resize, int min_width, int max_width, int min_height,
                int max_height);

    const std::string& id() const { return id_; }
    const Rect& rect() const { return rc_; }
    ContourResize resize() const { return resize_; }
    int min_width() const { return min_width_; }
    int max_width() const { return max_width_; }
    int min_height() const { return min_height_; }
    int max_height() const { return max_height_; }

    // Length of a side handle for a side of the given length.
    static int side_handle_length(int side) { return side / 4 > kMinSideHandle ? side / 4 : kMinSideHandle; }

    void move(Delta d) override;
    bool move_contour_point(std::size_t i, Delta d, Point mouse, MouseButton button) override;
    std::string_view type_tag() const override { return "control"; }
    Rect bounds() const override { return rc_; }
    std::vector<RenderPrimitive> appearance() const override;

protected:
    Contour make_contour() const override;

private:
    std::string id_;
    Rect rc_;
    ContourResize resize_;
    int min_width_;
    int max_width_;
    int min_height_;
    int max_height_;
};

}  // namespace moveable
