#pragma once

#include "moveable/shapes/contour_resize.hpp"
#include "moveable/shapes/control_stub.hpp"
#include "moveable/shapes/graph_object.hpp"
#include "moveable/shapes/n_circle.hpp"
#include "moveable/shapes/n_ring.hpp"
#include "moveable/shapes/rect_corners.hpp"
#include "moveable/shapes/rect_eight_node.hpp"
#include "moveable/shapes/rect_full.hpp"
#include "moveable/shapes/rect_solid_move.hpp"
#include "moveable/shapes/rect_tiled.hpp"
#include "moveable/shapes/regular_polygon.hpp"
#include "moveable/shapes/screw_nut.hpp"
