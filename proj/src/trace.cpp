#include "moveable/trace.hpp"

#include <cstdint>
#include <limits>

#include "moveable/scene.hpp"

namespace moveable {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
    throw InputError("trace line " + std::to_string(line) + ": " + what, line, 1);
}

int coordinate(const Json& j, const char* key, int line) {
    if (!j.contains(key)) fail(line, std::string("missing '") + key + "'");
    const Json& v = j.at(key);
    if (!v.is_number_integer()) fail(line, std::string("'") + key + "' must be an integer");
    if (v.is_number_unsigned()) {
        if (v.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<std::int32_t>::max())) {
            fail(line, std::string("'") + key + "' out of range");
        }
        return static_cast<int>(v.get<std::uint64_t>());
    }
    const auto x = v.get<std::int64_t>();
    if (x < std::numeric_limits<std::int32_t>::min() || x > std::numeric_limits<std::int32_t>::max()) {
        fail(line, std::string("'") + key + "' out of range");
    }
    return static_cast<int>(x);
}

TraceEvent parse_event(std::string_view text, int line) {
    Json j;
    try {
        j = Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        throw InputError("trace line " + std::to_string(line) + ": syntax error (" + e.what() + ")", line,
                         static_cast<int>(e.byte));
    }
    if (!j.is_object()) fail(line, "expected an object");
    for (const auto& [key, value] : j.items()) {
        if (key != "kind" && key != "x" && key != "y" && key != "button") fail(line, "unknown field '" + key + "'");
    }
    if (!j.contains("kind") || !j["kind"].is_string()) fail(line, "missing 'kind'");
    const std::string kind = j["kind"].get<std::string>();

    TraceEvent ev;
    if (kind == "down") {
        ev.kind = EventKind::Down;
    } else if (kind == "move") {
        ev.kind = EventKind::Move;
    } else if (kind == "up") {
        ev.kind = EventKind::Up;
    } else {
        fail(line, "unknown event kind '" + kind + "'");
    }
    ev.at = {coordinate(j, "x", line), coordinate(j, "y", line)};
    if (j.contains("button")) {
        if (ev.kind != EventKind::Down) fail(line, "only down events carry a button");
        const Json& b = j["button"];
        if (b == "left") {
            ev.button = MouseButton::Left;
        } else if (b == "right") {
            ev.button = MouseButton::Right;
        } else {
            fail(line, "button must be \"left\" or \"right\"");
        }
    }
    return ev;
}

}  // namespace

std::vector<TraceEvent> load_trace(std::string_view text) {
    std::vector<TraceEvent> events;
    int line = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = std::min(text.find('\n', start), text.size());
        ++line;
        std::string_view row = text.substr(start, end - start);
        if (!row.empty() && row.back() == '\r') row.remove_suffix(1);
        if (row.find_first_not_of(" \t") != std::string_view::npos) events.push_back(parse_event(row, line));
        start = end + 1;
    }
    return events;
}

std::string save_trace(std::span<const TraceEvent> events) {
    std::string out;
    for (const TraceEvent& ev : events) {
        Json j;
        j["kind"] = ev.kind == EventKind::Down ? "down" : ev.kind == EventKind::Move ? "move" : "up";
        j["x"] = ev.at.x;
        j["y"] = ev.at.y;
        if (ev.kind == EventKind::Down) j["button"] = ev.button == MouseButton::Left ? "left" : "right";
        out += j.dump();
        out += '\n';
    }
    return out;
}

}  // namespace moveable
