#pragma once

#include "moveable/moveable_object.hpp"

namespace moveable {

// Square node centers tiling rc along its long axis. Nodes have side
// min(width, height) and sit side by side from the left (or top) end; the
// last one is aligned to the far end, so only the last two may overlap.
std::vector<Point> squares_on_rectangle(const Rect& rc, int& half_side);

// Rectangle moved by any inner point through a row of standalone squares.
class RectTiled : public MoveableBase<RectTiled> {
public:
    explicit RectTiled(Rect rc);

    const Rect& rect() const { return rc_; }

    void move(Delta d) override;
    bool move_contour_point(std::size_t i, Delta d, Point mouse, MouseButton button) override;
    std::string_view type_tag() const override { return "rect_tiled"; }
    Rect bounds() const override { return rc_; }
    std::vector<RenderPrimitive> appearance() const override;

protected:
    Contour make_contour() const override;

private:
    Rect rc_;
};

}  // namespace moveable
