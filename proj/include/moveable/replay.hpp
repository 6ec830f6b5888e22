#pragma once

#include <optional>
#include <span>
#include <vector>

#include "moveable/mover.hpp"
#include "moveable/scene.hpp"
#include "moveable/trace.hpp"

namespace moveable {

struct EventRecord {
    bool handled = false;  // return value of catch / move / release
    bool caught = false;   // an object is held after the event
    CursorHint cursor = CursorHint::Default;
};

struct GestureSummary {
    std::size_t object = 0;
    GrabKind grab;
    Delta net;                       // last mouse position minus the catch point
    std::size_t nodes_at_catch = 0;  // contour size of the caught object
    std::size_t nodes_at_end = 0;    // after release (or at end of trace)
    bool released = false;
};

struct ReplayReport {
    Scene final_scene;
    std::vector<EventRecord> events;  // one per trace event
    std::vector<GestureSummary> gestures;
};

// Feeds the events to a fresh Mover holding the scene's objects, the same way
// mouse-down, mouse-move and mouse-up handlers would. Deterministic.
ReplayReport replay(const Scene& scene, std::span<const TraceEvent> events);

Json report_to_json(const ReplayReport& report);

}  // namespace moveable
