#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "moveable/moveable_object.hpp"
#include "moveable/mover.hpp"

namespace moveable {

using Json = nlohmann::ordered_json;

// Malformed input. line/column are 1-based when known and 0 otherwise;
// `path` is a JSON pointer to the offending value when known.
class InputError : public std::runtime_error {
public:
    InputError(const std::string& message, int line = 0, int column = 0, std::string path = {});

    int line() const { return line_; }
    int column() const { return column_; }
    const std::string& path() const { return path_; }

private:
    int line_;
    int column_;
    std::string path_;
};

// Work area, containment policy and the registered objects in priority order.
struct Scene {
    WorkArea work{800, 600};
    ContainmentPolicy policy;
    std::vector<std::unique_ptr<MoveableObject>> objects;

    Scene() = default;
    Scene(WorkArea w, ContainmentPolicy p) : work(w), policy(p) {}
    Scene(const Scene& other);
    Scene& operator=(const Scene& other);
    Scene(Scene&&) noexcept = default;
    Scene& operator=(Scene&&) noexcept = default;
    ~Scene() = default;

    template <class Shape, class... Args>
    Shape& emplace(Args&&... args) {
        auto obj = std::make_unique<Shape>(std::forward<Args>(args)...);
        Shape& ref = *obj;
        objects.push_back(std::move(obj));
        return ref;
    }
};

// Type tag plus constructor fields of one shape. Throws std::invalid_argument
// for object types the scene format does not know.
Json shape_to_json(const MoveableObject& object);
// Throws InputError for malformed records and InvariantViolation when the
// fields describe an impossible shape.
std::unique_ptr<MoveableObject> shape_from_json(const Json& record, const std::string& path = "");

Json scene_to_json(const Scene& scene);
Scene scene_from_json(const Json& doc);

// Canonical text: two-space indented JSON with a fixed key order and a
// trailing newline. save_scene(load_scene(save_scene(s))) == save_scene(s).
std::string save_scene(const Scene& scene);
Scene load_scene(std::string_view text);

Mover build_mover(const Scene& scene);
Scene scene_from_mover(const Mover& mover);

// 64-bit FNV-1a of arbitrary text, as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view text);
std::string scene_digest(const Scene& scene);

}  // namespace moveable
