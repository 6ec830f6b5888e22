#include "moveable/scene.hpp"

#include <cstdint>
#include <cstdio>
#include <limits>
#include <set>

#include "moveable/errors.hpp"
#include "moveable/shapes.hpp"

namespace moveable {

InputError::InputError(const std::string& message, int line, int column, std::string path)
    : std::runtime_error(message), line_(line), column_(column), path_(std::move(path)) {}

Scene::Scene(const Scene& other) : work(other.work), policy(other.policy) {
    objects.reserve(other.objects.size());
    for (const auto& o : other.objects) objects.push_back(o->clone());
}

Scene& Scene::operator=(const Scene& other) {
    if (this != &other) *this = Scene(other);
    return *this;
}

namespace {

Json point_json(Point p) { return Json::array({p.x, p.y}); }
Json rect_json(const Rect& r) { return Json::array({r.x, r.y, r.width, r.height}); }

// Field access on one JSON object with path-carrying errors and a check for
// unknown keys.
class Fields {
public:
    Fields(const Json& j, std::string path) : j_(j), path_(std::move(path)) {
        if (!j_.is_object()) fail("expected an object", path_);
    }

    [[noreturn]] static void fail(const std::string& what, const std::string& path) {
        throw InputError((path.empty() ? std::string("/") : path) + ": " + what, 0, 0, path);
    }

    bool has(const std::string& key) const { return j_.contains(key); }

    const Json& at(const std::string& key) {
        used_.insert(key);
        if (!j_.contains(key)) fail("missing field '" + key + "'", path_);
        return j_.at(key);
    }

    std::string sub(const std::string& key) const { return path_ + "/" + key; }

    int integer(const std::string& key) { return as_int(at(key), sub(key)); }
    int integer_or(const std::string& key, int fallback) { return has(key) ? integer(key) : fallback; }

    double real(const std::string& key) {
        const Json& v = at(key);
        if (!v.is_number()) fail("expected a number", sub(key));
        return v.get<double>();
    }

    std::string text(const std::string& key) {
        const Json& v = at(key);
        if (!v.is_string()) fail("expected a string", sub(key));
        return v.get<std::string>();
    }

    Point point(const std::string& key) { return as_point(at(key), sub(key)); }

    Rect rect(const std::string& key) {
        const Json& v = at(key);
        if (!v.is_array() || v.size() != 4) fail("expected [x, y, width, height]", sub(key));
        return {as_int(v[0], sub(key) + "/0"), as_int(v[1], sub(key) + "/1"), as_int(v[2], sub(key) + "/2"),
                as_int(v[3], sub(key) + "/3")};
    }

    const Json& array(const std::string& key) {
        const Json& v = at(key);
        if (!v.is_array()) fail("expected an array", sub(key));
        return v;
    }

    void finish() const {
        for (const auto& [key, value] : j_.items()) {
            if (!used_.count(key)) fail("unknown field '" + key + "'", path_);
        }
    }

    static int as_int(const Json& v, const std::string& path) {
        if (!v.is_number_integer()) fail("expected an integer", path);
        if (v.is_number_unsigned()) {
            if (v.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<int>::max())) {
                fail("integer out of range", path);
            }
            return static_cast<int>(v.get<std::uint64_t>());
        }
        const auto x = v.get<std::int64_t>();
        if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max()) fail("integer out of range", path);
        return static_cast<int>(x);
    }

    static Point as_point(const Json& v, const std::string& path) {
        if (!v.is_array() || v.size() != 2) fail("expected [x, y]", path);
        return {as_int(v[0], path + "/0"), as_int(v[1], path + "/1")};
    }

private:
    const Json& j_;
    std::string path_;
    std::set<std::string> used_;
};

ContourResize parse_resize(const std::string& s, const std::string& path) {
    if (s == "none") return ContourResize::None;
    if (s == "ns") return ContourResize::NS;
    if (s == "we") return ContourResize::WE;
    if (s == "any") return ContourResize::Any;
    Fields::fail("unknown resize mode '" + s + "'", path);
}

CornerStyle parse_style(const std::string& s, const std::string& path) {
    if (s == "squares") return CornerStyle::ShiftedSquares;
    if (s == "circles") return CornerStyle::CornerCircles;
    Fields::fail("unknown corner style '" + s + "'", path);
}

std::unique_ptr<MoveableObject> build_shape(Fields& f, const std::string& type, const std::string& path) {
    if (type == "rect_corners") {
        const Rect rc = f.rect("rect");
        const CornerStyle style = parse_style(f.text("style"), f.sub("style"));
        const int mw = f.integer_or("min_width", 20);
        const int mh = f.integer_or("min_height", 20);
        f.finish();
        return std::make_unique<RectCorners>(rc, style, mw, mh);
    }
    if (type == "rect_eight_node") {
        const Rect rc = f.rect("rect");
        const ContourResize mode = parse_resize(f.text("resize"), f.sub("resize"));
        const int mw = f.integer_or("min_width", 20);
        const int mh = f.integer_or("min_height", 20);
        f.finish();
        return std::make_unique<RectEightNode>(rc, mode, mw, mh);
    }
    if (type == "graph") {
        std::vector<Point> pts;
        std::vector<int> radii;
        std::vector<std::string> colors;
        std::vector<GraphLink> links;
        const Json& jp = f.array("points");
        for (std::size_t i = 0; i < jp.size(); ++i) pts.push_back(Fields::as_point(jp[i], f.sub("points") + "/" + std::to_string(i)));
        const Json& jr = f.array("radii");
        for (std::size_t i = 0; i < jr.size(); ++i) radii.push_back(Fields::as_int(jr[i], f.sub("radii") + "/" + std::to_string(i)));
        const Json& jc = f.array("colors");
        for (std::size_t i = 0; i < jc.size(); ++i) {
            if (!jc[i].is_string()) Fields::fail("expected a string", f.sub("colors") + "/" + std::to_string(i));
            colors.push_back(jc[i].get<std::string>());
        }
        const Json& jl = f.array("links");
        for (std::size_t i = 0; i < jl.size(); ++i) {
            const Point ab = Fields::as_point(jl[i], f.sub("links") + "/" + std::to_string(i));
            links.push_back({ab.x, ab.y});
        }
        f.finish();
        return std::make_unique<GraphObject>(std::move(pts), std::move(radii), std::move(colors), std::move(links));
    }
    if (type == "regular_polygon") {
        const Point c = f.point("center");
        const int r = f.integer("inradius");
        const int n = f.integer("vertices");
        const double a = f.real("angle");
        f.finish();
        return std::make_unique<RegularPolygon>(c, r, n, a);
    }
    if (type == "rect_solid") {
        const Rect rc = f.rect("rect");
        f.finish();
        return std::make_unique<RectSolidMove>(rc);
    }
    if (type == "rect_tiled") {
        const Rect rc = f.rect("rect");
        f.finish();
        return std::make_unique<RectTiled>(rc);
    }
    if (type == "screw_nut") {
        const Point c = f.point("center");
        const int ri = f.integer("inner_radius");
        const int ro = f.integer("outer_radius");
        const double a = f.real("angle");
        f.finish();
        return std::make_unique<ScrewNut>(c, ri, ro, a);
    }
    if (type == "rect_full") {
        const Rect rc = f.rect("rect");
        const int mw = f.integer_or("min_width", 20);
        const int mh = f.integer_or("min_height", 20);
        f.finish();
        return std::make_unique<RectFull>(rc, mw, mh);
    }
    if (type == "ncircle") {
        const Point c = f.point("center");
        const int r = f.integer("radius");
        const int small = f.integer_or("small_radius", 7);
        const int spacing = f.integer_or("spacing", 10);
        const int min_r = f.integer_or("min_radius", 20);
        f.finish();
        return std::make_unique<NCircle>(c, r, small, spacing, min_r);
    }
    if (type == "nring") {
        const Point c = f.point("center");
        const int ri = f.integer("inner_radius");
        const int ro = f.integer("outer_radius");
        const int small = f.integer_or("small_radius", 7);
        const int spacing = f.integer_or("spacing", 10);
        f.finish();
        return std::make_unique<NRing>(c, ri, ro, small, spacing);
    }
    if (type == "control") {
        const std::string id = f.text("id");
        const Rect rc = f.rect("rect");
        const ContourResize mode = parse_resize(f.text("resize"), f.sub("resize"));
        const int min_w = f.integer("min_width");
        const int max_w = f.integer("max_width");
        const int min_h = f.integer("min_height");
        const int max_h = f.integer("max_height");
        f.finish();
        return std::make_unique<ControlStub>(id, rc, mode, min_w, max_w, min_h, max_h);
    }
    Fields::fail("unknown shape type '" + type + "'", path + "/type");
}

}  // namespace

Json shape_to_json(const MoveableObject& object) {
    Json j;
    j["type"] = std::string(object.type_tag());
    if (const auto* s = dynamic_cast<const RectCorners*>(&object)) {
        j["rect"] = rect_json(s->rect());
        j["style"] = s->style() == CornerStyle::ShiftedSquares ? "squares" : "circles";
        j["min_width"] = s->min_width();
        j["min_height"] = s->min_height();
    } else if (const auto* s = dynamic_cast<const RectEightNode*>(&object)) {
        j["rect"] = rect_json(s->rect());
        j["resize"] = std::string(to_string(s->resize()));
        j["min_width"] = s->min_width();
        j["min_height"] = s->min_height();
    } else if (const auto* s = dynamic_cast<const GraphObject*>(&object)) {
        Json pts = Json::array(), links = Json::array();
        for (Point p : s->points()) pts.push_back(point_json(p));
        for (const GraphLink& l : s->links()) links.push_back(Json::array({l.a, l.b}));
        j["points"] = pts;
        j["radii"] = s->radii();
        j["colors"] = s->colors();
        j["links"] = links;
    } else if (const auto* s = dynamic_cast<const RegularPolygon*>(&object)) {
        j["center"] = point_json(s->center());
        j["inradius"] = s->inradius();
        j["vertices"] = s->vertex_count();
        j["angle"] = s->angle();
    } else if (const auto* s = dynamic_cast<const RectSolidMove*>(&object)) {
        j["rect"] = rect_json(s->rect());
    } else if (const auto* s = dynamic_cast<const RectTiled*>(&object)) {
        j["rect"] = rect_json(s->rect());
    } else if (const auto* s = dynamic_cast<const ScrewNut*>(&object)) {
        j["center"] = point_json(s->center());
        j["inner_radius"] = s->inner_radius();
        j["outer_radius"] = s->outer_radius();
        j["angle"] = s->angle();
    } else if (const auto* s = dynamic_cast<const RectFull*>(&object)) {
        j["rect"] = rect_json(s->rect());
        j["min_width"] = s->min_width();
        j["min_height"] = s->min_height();
    } else if (const auto* s = dynamic_cast<const NCircle*>(&object)) {
        j["center"] = point_json(s->center());
        j["radius"] = s->radius();
        j["small_radius"] = s->small_radius();
        j["spacing"] = s->spacing();
        j["min_radius"] = s->min_radius();
    } else if (const auto* s = dynamic_cast<const NRing*>(&object)) {
        j["center"] = point_json(s->center());
        j["inner_radius"] = s->inner_radius();
        j["outer_radius"] = s->outer_radius();
        j["small_radius"] = s->small_radius();
        j["spacing"] = s->spacing();
    } else if (const auto* s = dynamic_cast<const ControlStub*>(&object)) {
        j["id"] = s->id();
        j["rect"] = rect_json(s->rect());
        j["resize"] = std::string(to_string(s->resize()));
        j["min_width"] = s->min_width();
        j["max_width"] = s->max_width();
        j["min_height"] = s->min_height();
        j["max_height"] = s->max_height();
    } else {
        throw std::invalid_argument("shape type '" + std::string(object.type_tag()) + "' has no scene encoding");
    }
    return j;
}

std::unique_ptr<MoveableObject> shape_from_json(const Json& record, const std::string& path) {
    Fields f(record, path);
    const std::string type = f.text("type");
    try {
        return build_shape(f, type, path);
    } catch (const InvariantViolation& e) {
        throw InvariantViolation((path.empty() ? std::string("/") : path) + ": " + e.what());
    }
}

Json scene_to_json(const Scene& scene) {
    Json j;
    j["work"] = Json::array({scene.work.width, scene.work.height});
    j["policy"] = to_string(scene.policy);
    Json objects = Json::array();
    for (const auto& o : scene.objects) objects.push_back(shape_to_json(*o));
    j["objects"] = std::move(objects);
    return j;
}

Scene scene_from_json(const Json& doc) {
    Fields f(doc, "");
    Scene scene;
    const Point work = f.point("work");
    if (work.x < 1 || work.y < 1) throw InvariantViolation("/work: work area must be positive");
    scene.work = {work.x, work.y};
    const std::string policy = f.text("policy");
    const auto parsed = parse_policy(policy);
    if (!parsed) Fields::fail("unknown policy '" + policy + "'", "/policy");
    scene.policy = *parsed;
    const Json& objects = f.array("objects");
    f.finish();
    for (std::size_t i = 0; i < objects.size(); ++i) {
        scene.objects.push_back(shape_from_json(objects[i], "/objects/" + std::to_string(i)));
    }
    return scene;
}

std::string save_scene(const Scene& scene) { return scene_to_json(scene).dump(2) + "\n"; }

Scene load_scene(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        int line = 1;
        int column = 1;
        const std::size_t end = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
        for (std::size_t i = 0; i < end; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw InputError("syntax error at line " + std::to_string(line) + ", column " + std::to_string(column) +
                             " (" + e.what() + ")",
                         line, column);
    }
    return scene_from_json(doc);
}

Mover build_mover(const Scene& scene) {
    Mover mover(scene.work, scene.policy);
    for (const auto& o : scene.objects) mover.add(o->clone());
    return mover;
}

Scene scene_from_mover(const Mover& mover) {
    Scene scene(mover.work_area(), mover.policy());
    for (std::size_t i = 0; i < mover.size(); ++i) scene.objects.push_back(mover[i].clone());
    return scene;
}

std::string fnv1a_hex(std::string_view text) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string scene_digest(const Scene& scene) { return fnv1a_hex(save_scene(scene)); }

}  // namespace moveable
