#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "moveable/contour.hpp"
#include "moveable/moveable_object.hpp"
#include "moveable/shapes/contour_resize.hpp"

namespace moveable {

// Size of the surface hosting the objects; valid pixels are [0, width) x [0, height).
struct WorkArea {
    int width = 0;
    int height = 0;
    friend bool operator==(const WorkArea&, const WorkArea&) = default;
};

// How far objects may be moved across the borders of the work area.
struct ContainmentPolicy {
    enum class Kind { Unrestricted, PartlyVisible, FullyInside };

    Kind kind = Kind::PartlyVisible;
    int margin = 16;  // PartlyVisible only: pixels that must stay inside on each axis

    static ContainmentPolicy unrestricted() { return {Kind::Unrestricted, 0}; }
    static ContainmentPolicy partly_visible(int margin) { return {Kind::PartlyVisible, margin}; }
    static ContainmentPolicy fully_inside() { return {Kind::FullyInside, 0}; }

    friend bool operator==(const ContainmentPolicy&, const ContainmentPolicy&) = default;
};

// "unrestricted", "inside" or "partly:N".
std::string to_string(const ContainmentPolicy& policy);
std::optional<ContainmentPolicy> parse_policy(std::string_view text);

// Clips a whole-object move of `box` so the policy still holds afterwards.
// Movement that brings an already-violating box back inside is never cut.
Delta apply_containment(const ContainmentPolicy& policy, WorkArea work, const Bounds& box, Delta d);
bool is_contained(const ContainmentPolicy& policy, WorkArea work, const Bounds& box);

struct GrabNode {
    std::size_t index = 0;
    friend bool operator==(const GrabNode&, const GrabNode&) = default;
};
struct GrabConnection {
    std::size_t index = 0;
    friend bool operator==(const GrabConnection&, const GrabConnection&) = default;
};
using GrabKind = std::variant<GrabNode, GrabConnection>;

struct Idle {
    friend bool operator==(const Idle&, const Idle&) = default;
};
struct Caught {
    std::size_t object = 0;
    GrabKind grab;
    Point last_mouse;
    MouseButton button = MouseButton::Left;
    MovementFreedom freedom = MovementFreedom::Any;  // of the grabbed node, taken at catch time
    friend bool operator==(const Caught&, const Caught&) = default;
};
using MoverState = std::variant<Idle, Caught>;

struct SenseResult {
    struct Over {
        std::size_t object = 0;
        GrabKind grab;
    };
    CursorHint cursor = CursorHint::Default;
    std::optional<Over> over;
};

enum class EntryKind { Graphical, ControlStub };

// Supervises moving and resizing of its registered objects.
//
// Entry order is hit priority: index 0 is checked first and drawn last. The
// Mover works only with contours; objects are told what to do through
// move() and move_contour_point() and their contours are rebuilt after
// every accepted change.
class Mover {
public:
    explicit Mover(WorkArea work, ContainmentPolicy policy = ContainmentPolicy::partly_visible(16));

    Mover(const Mover& other);
    Mover& operator=(const Mover& other);
    Mover(Mover&&) noexcept = default;
    Mover& operator=(Mover&&) noexcept = default;
    ~Mover() = default;

    std::size_t add(std::unique_ptr<MoveableObject> object);
    void insert(std::size_t at, std::unique_ptr<MoveableObject> object);
    // Registers a control with its resize mode and size ranges.
    void insert_control(std::size_t at, std::string id, Rect rc, ContourResize resize, int min_width, int max_width,
                        int min_height, int max_height);

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    // References stay valid until the next move(): an accepted resize
    // replaces the object with the checked copy.
    const MoveableObject& operator[](std::size_t i) const { return *entries_.at(i).object; }
    MoveableObject& operator[](std::size_t i) { return *entries_.at(i).object; }
    EntryKind kind(std::size_t i) const { return entries_.at(i).kind; }

    WorkArea work_area() const { return work_; }
    const ContainmentPolicy& policy() const { return policy_; }
    void set_policy(const ContainmentPolicy& policy) { policy_ = policy; }

    // Mouse down. Returns true if some object was caught; a no-op returning
    // false while another object is held.
    bool catch_at(Point p, MouseButton button = MouseButton::Left);
    // Mouse move. Returns true if anything changed and needs repainting.
    bool move(Point p);
    // Mouse up. Returns true if an object was held.
    bool release();

    bool is_caught() const { return std::holds_alternative<Caught>(state_); }
    const MoverState& state() const { return state_; }
    // Index of the object released last. Throws std::logic_error before the
    // first completed gesture.
    std::size_t was_caught_object() const;

    SenseResult sense(Point p) const;
    std::vector<RenderPrimitive> draw_contours() const;

private:
    struct Entry {
        std::unique_ptr<MoveableObject> object;
        EntryKind kind = EntryKind::Graphical;
    };

    void insert_entry(std::size_t at, Entry entry);
    std::optional<std::pair<std::size_t, HitResult>> find_hit(Point p) const;
    bool move_whole(Caught& c, Delta d);
    bool move_node(Caught& c, std::size_t node, Delta d, Point mouse, Point previous_mouse);
    Bounds settled_bounds(const MoveableObject& object) const;

    WorkArea work_;
    ContainmentPolicy policy_;
    std::vector<Entry> entries_;
    MoverState state_ = Idle{};
    std::optional<std::size_t> was_caught_;
    std::optional<Bounds> settled_;  // settled bounds of the caught object during a node gesture
};

}  // namespace moveable
