#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "moveable/geometry.hpp"
#include "moveable/moveable_object.hpp"

namespace moveable {

enum class EventKind { Down, Move, Up };

struct TraceEvent {
    EventKind kind = EventKind::Move;
    Point at;
    MouseButton button = MouseButton::Left;  // meaningful for Down only

    static TraceEvent down(Point p, MouseButton b = MouseButton::Left) { return {EventKind::Down, p, b}; }
    static TraceEvent move(Point p) { return {EventKind::Move, p, MouseButton::Left}; }
    static TraceEvent up(Point p) { return {EventKind::Up, p, MouseButton::Left}; }

    friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

// JSON lines, one event per line:
//   {"kind":"down","x":10,"y":20,"button":"left"}
//   {"kind":"move","x":12,"y":21}
//   {"kind":"up","x":12,"y":21}
// Blank lines are skipped. Errors are InputError with the 1-based line.
std::vector<TraceEvent> load_trace(std::string_view text);
std::string save_trace(std::span<const TraceEvent> events);

}  // namespace moveable
