#pragma once

#include <string>
#include <utility>

#include "moveable/moveable_object.hpp"

namespace moveable {

struct GraphLink {
    int a = 0;
    int b = 0;
    friend bool operator==(const GraphLink&, const GraphLink&) = default;
};

// Graph whose vertices are individually draggable circles and whose links
// move the whole graph. Disjoint parts and isolated vertices are allowed.
class GraphObject : public MoveableBase<GraphObject> {
public:
    GraphObject(std::vector<Point> pt, std::vector<int> radius, std::vector<std::string> color,
                std::vector<GraphLink> links);

    const std::vector<Point>& points() const { return pt_; }
    const std::vector<int>& radii() const { return radius_; }
    const std::vector<std::string>& colors() const { return color_; }
    const std::vector<GraphLink>& links() const { return links_; }

    void move(Delta d) override;
    bool move_contour_point(std::size_t i, Delta d, Point mouse, MouseButton button) override;
    std::string_view type_tag() const override { return "graph"; }
    Rect bounds() const override;
    std::vector<RenderPrimitive> appearance() const override;

protected:
    Contour make_contour() const override;

private:
    std::vector<Point> pt_;
    std::vector<int> radius_;
    std::vector<std::string> color_;
    std::vector<GraphLink> links_;
};

}  // namespace moveable
