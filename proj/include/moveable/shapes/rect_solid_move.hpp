#pragma once

#include "moveable/moveable_object.hpp"

namespace moveable {

// Rectangle moved by any inner point: two squares filling its ends plus a
// connection as wide as the rectangle. No resizing.
class RectSolidMove : public MoveableBase<RectSolidMove> {
public:
    explicit RectSolidMove(Rect rc);

    const Rect& rect() const { return rc_; }

    void move(Delta d) override;
    bool move_contour_point(std::size_t i, Delta d, Point mouse, MouseButton button) override;
    std::string_view type_tag() const override { return "rect_solid"; }
    Rect bounds() const override { return rc_; }
    std::vector<RenderPrimitive> appearance() const override;

protected:
    Contour make_contour() const override;

private:
    Rect rc_;
};

}  // namespace moveable
