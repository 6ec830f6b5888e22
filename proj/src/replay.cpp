#include "moveable/replay.hpp"

#include "moveable/detail/overloaded.hpp"

namespace moveable {

namespace {

Json grab_json(const GrabKind& g) {
    return std::visit(detail::overloaded{
                          [](const GrabNode& n) { return Json{{"node", n.index}}; },
                          [](const GrabConnection& c) { return Json{{"connection", c.index}}; },
                      },
                      g);
}

}  // namespace

ReplayReport replay(const Scene& scene, std::span<const TraceEvent> events) {
    Mover mover = build_mover(scene);
    ReplayReport report;
    report.events.reserve(events.size());

    std::optional<CursorHint> held_cursor;
    Point catch_point;
    for (const TraceEvent& ev : events) {
        EventRecord rec;
        switch (ev.kind) {
            case EventKind::Down: {
                const SenseResult over = mover.sense(ev.at);
                rec.handled = mover.catch_at(ev.at, ev.button);
                if (rec.handled) {
                    const auto& c = std::get<Caught>(mover.state());
                    held_cursor = over.cursor;
                    catch_point = ev.at;
                    GestureSummary g;
                    g.object = c.object;
                    g.grab = c.grab;
                    g.nodes_at_catch = mover[c.object].contour().node_count();
                    g.nodes_at_end = g.nodes_at_catch;
                    report.gestures.push_back(g);
                }
                break;
            }
            case EventKind::Move:
                rec.handled = mover.move(ev.at);
                if (mover.is_caught()) {
                    GestureSummary& g = report.gestures.back();
                    g.net = std::get<Caught>(mover.state()).last_mouse - catch_point;
                    g.nodes_at_end = mover[g.object].contour().node_count();
                }
                break;
            case EventKind::Up:
                rec.handled = mover.release();
                if (rec.handled) {
                    GestureSummary& g = report.gestures.back();
                    g.released = true;
                    g.nodes_at_end = mover[g.object].contour().node_count();
                    held_cursor.reset();
                }
                break;
        }
        rec.caught = mover.is_caught();
        rec.cursor = held_cursor ? *held_cursor : mover.sense(ev.at).cursor;
        report.events.push_back(rec);
    }
    report.final_scene = scene_from_mover(mover);
    return report;
}

Json report_to_json(const ReplayReport& report) {
    Json j;
    j["digest"] = scene_digest(report.final_scene);
    j["final_scene"] = scene_to_json(report.final_scene);
    Json events = Json::array();
    for (const EventRecord& e : report.events) {
        events.push_back(Json{{"handled", e.handled}, {"caught", e.caught}, {"cursor", std::string(to_string(e.cursor))}});
    }
    j["events"] = std::move(events);
    Json gestures = Json::array();
    for (const GestureSummary& g : report.gestures) {
        gestures.push_back(Json{{"object", g.object},
                                {"grab", grab_json(g.grab)},
                                {"net", Json::array({g.net.dx, g.net.dy})},
                                {"nodes_at_catch", g.nodes_at_catch},
                                {"nodes_at_end", g.nodes_at_end},
                                {"released", g.released}});
    }
    j["gestures"] = std::move(gestures);
    return j;
}

}  // namespace moveable
