#pragma once

#include <array>
#include <climits>
#include <string>
#include <string_view>

#include "moveable/errors.hpp"
#include "moveable/geometry.hpp"
#include "moveable/render.hpp"

namespace moveable::detail {

enum Edge : unsigned {
    kLeft = 1u << 0,
    kTop = 1u << 1,
    kRight = 1u << 2,
    kBottom = 1u << 3,
};

struct SizeLimits {
    int min_width = 1;
    int max_width = INT_MAX;
    int min_height = 1;
    int max_height = INT_MAX;
};

enum class LimitMode {
    Reject,  // an axis whose new size falls outside the limits is left alone
    Clamp,   // the new size is clamped into the limits
};

// Edges moved by each of the eight handles LT, T, RT, R, RB, B, LB, L.
inline constexpr std::array<unsigned, 8> kEightHandleEdges = {
    kLeft | kTop, kTop, kRight | kTop, kRight, kRight | kBottom, kBottom, kLeft | kBottom, kLeft};

// Drags the given edges of rc by d. Horizontal and vertical parts are
// accepted independently. Returns true iff rc changed.
inline bool drag_edges(Rect& rc, unsigned edges, Delta d, const SizeLimits& lim, LimitMode mode) {
    auto resolve = [mode](int wanted, int lo, int hi, int current) {
        if (mode == LimitMode::Clamp) return wanted < lo ? lo : (wanted > hi ? hi : wanted);
        return (wanted < lo || wanted > hi) ? current : wanted;
    };
    bool changed = false;
    if (d.dx != 0 && (edges & (kLeft | kRight))) {
        const int wanted = (edges & kLeft) ? rc.width - d.dx : rc.width + d.dx;
        const int w = resolve(wanted, lim.min_width, lim.max_width, rc.width);
        if (w != rc.width) {
            if (edges & kLeft) rc.x += rc.width - w;
            rc.width = w;
            changed = true;
        }
    }
    if (d.dy != 0 && (edges & (kTop | kBottom))) {
        const int wanted = (edges & kTop) ? rc.height - d.dy : rc.height + d.dy;
        const int h = resolve(wanted, lim.min_height, lim.max_height, rc.height);
        if (h != rc.height) {
            if (edges & kTop) rc.y += rc.height - h;
            rc.height = h;
            changed = true;
        }
    }
    return changed;
}

// Edges a handle may move given its movement freedom.
inline unsigned gate_edges(unsigned edges, bool vertical_ok, bool horizontal_ok) {
    if (!vertical_ok) edges &= ~(kTop | kBottom);
    if (!horizontal_ok) edges &= ~(kLeft | kRight);
    return edges;
}

inline void check_rect(std::string_view type, const Rect& rc, int min_width, int min_height) {
    const std::string name(type);
    if (min_width < 1 || min_height < 1) throw InvariantViolation(name + ": minimum sizes must be >= 1");
    if (rc.width < min_width) throw InvariantViolation(name + ": width below minimum");
    if (rc.height < min_height) throw InvariantViolation(name + ": height below minimum");
}

inline RenderPrimitive body_box(const Rect& rc, const char* color) {
    return {BoxGlyph{rc}, Fill::Solid, color, Layer::Shapes};
}

}  // namespace moveable::detail
