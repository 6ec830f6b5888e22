#include "moveable/mover.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "moveable/detail/overloaded.hpp"
#include "moveable/shapes/control_stub.hpp"

namespace moveable {

std::string to_string(const ContainmentPolicy& policy) {
    switch (policy.kind) {
        case ContainmentPolicy::Kind::Unrestricted: return "unrestricted";
        case ContainmentPolicy::Kind::FullyInside: return "inside";
        case ContainmentPolicy::Kind::PartlyVisible: return "partly:" + std::to_string(policy.margin);
    }
    return "?";
}

std::optional<ContainmentPolicy> parse_policy(std::string_view text) {
    if (text == "unrestricted") return ContainmentPolicy::unrestricted();
    if (text == "inside") return ContainmentPolicy::fully_inside();
    constexpr std::string_view prefix = "partly:";
    if (text.starts_with(prefix)) {
        const std::string_view digits = text.substr(prefix.size());
        int margin = 0;
        const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), margin);
        if (ec == std::errc{} && end == digits.data() + digits.size() && !digits.empty() && margin >= 0) {
            return ContainmentPolicy::partly_visible(margin);
        }
    }
    return std::nullopt;
}

namespace {

struct AxisRange {
    int lo;
    int hi;
};

// Allowed shifts of [box_lo, box_hi] along an axis of `extent` pixels.
AxisRange allowed_shift(const ContainmentPolicy& policy, int box_lo, int box_hi, int extent) {
    const int size = box_hi - box_lo + 1;
    const int keep = policy.kind == ContainmentPolicy::Kind::FullyInside
                         ? size
                         : std::min({policy.margin, size, extent});
    return {(keep - 1) - box_hi, (extent - keep) - box_lo};
}

int clip_axis(int d, AxisRange r) {
    if (d < 0) return std::max(d, std::min(0, r.lo));
    if (d > 0) return std::min(d, std::max(0, r.hi));
    return 0;
}

}  // namespace

Delta apply_containment(const ContainmentPolicy& policy, WorkArea work, const Bounds& box, Delta d) {
    if (policy.kind == ContainmentPolicy::Kind::Unrestricted) return d;
    return {clip_axis(d.dx, allowed_shift(policy, box.min_x, box.max_x, work.width)),
            clip_axis(d.dy, allowed_shift(policy, box.min_y, box.max_y, work.height))};
}

bool is_contained(const ContainmentPolicy& policy, WorkArea work, const Bounds& box) {
    if (policy.kind == ContainmentPolicy::Kind::Unrestricted) return true;
    const AxisRange x = allowed_shift(policy, box.min_x, box.max_x, work.width);
    const AxisRange y = allowed_shift(policy, box.min_y, box.max_y, work.height);
    return x.lo <= 0 && 0 <= x.hi && y.lo <= 0 && 0 <= y.hi;
}

Mover::Mover(WorkArea work, ContainmentPolicy policy) : work_(work), policy_(policy) {
    if (work_.width < 1 || work_.height < 1) throw std::invalid_argument("work area must be positive");
}

Mover::Mover(const Mover& other)
    : work_(other.work_), policy_(other.policy_), state_(other.state_), was_caught_(other.was_caught_),
      settled_(other.settled_) {
    entries_.reserve(other.entries_.size());
    for (const Entry& e : other.entries_) entries_.push_back({e.object->clone(), e.kind});
}

Mover& Mover::operator=(const Mover& other) {
    if (this != &other) *this = Mover(other);
    return *this;
}

std::size_t Mover::add(std::unique_ptr<MoveableObject> object) {
    insert(entries_.size(), std::move(object));
    return entries_.size() - 1;
}

void Mover::insert(std::size_t at, std::unique_ptr<MoveableObject> object) {
    if (!object) throw std::invalid_argument("cannot register a null object");
    const EntryKind kind = dynamic_cast<const ControlStub*>(object.get()) ? EntryKind::ControlStub : EntryKind::Graphical;
    insert_entry(at, {std::move(object), kind});
}

void Mover::insert_control(std::size_t at, std::string id, Rect rc, ContourResize resize, int min_width,
                           int max_width, int min_height, int max_height) {
    insert_entry(at, {std::make_unique<ControlStub>(std::move(id), rc, resize, min_width, max_width, min_height,
                                                    max_height),
                      EntryKind::ControlStub});
}

void Mover::insert_entry(std::size_t at, Entry entry) {
    if (at > entries_.size()) throw std::out_of_range("insert position " + std::to_string(at) + " out of range");
    entries_.insert(entries_.begin() + static_cast<std::ptrdiff_t>(at), std::move(entry));
    // Keep indices held by the state machine pointing at the same objects.
    if (auto* c = std::get_if<Caught>(&state_); c && c->object >= at) ++c->object;
    if (was_caught_ && *was_caught_ >= at) ++*was_caught_;
}

std::optional<std::pair<std::size_t, HitResult>> Mover::find_hit(Point p) const {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        HitResult hit = entries_[i].object->contour().hit_test(p);
        if (!is_miss(hit)) return std::pair{i, std::move(hit)};
    }
    return std::nullopt;
}

bool Mover::catch_at(Point p, MouseButton button) {
    if (is_caught()) return false;
    const auto hit = find_hit(p);
    if (!hit) return false;
    const auto& [index, result] = *hit;
    Caught c;
    c.object = index;
    c.last_mouse = p;
    c.button = button;
    if (const auto* n = std::get_if<NodeHit>(&result)) {
        c.grab = GrabNode{n->node};
        c.freedom = entries_[index].object->contour().node_freedom(n->node);
    } else {
        c.grab = GrabConnection{std::get<ConnectionHit>(result).connection};
    }
    state_ = c;
    settled_.reset();
    return true;
}

bool Mover::move(Point p) {
    auto* c = std::get_if<Caught>(&state_);
    if (!c) return false;
    const Point previous = c->last_mouse;
    const Delta d = p - previous;
    c->last_mouse = p;
    if (d.is_zero()) return false;
    if (const auto* n = std::get_if<GrabNode>(&c->grab)) return move_node(*c, n->index, d, p, previous);
    return move_whole(*c, d);
}

bool Mover::move_whole(Caught& c, Delta d) {
    MoveableObject& obj = *entries_[c.object].object;
    const Delta applied = apply_containment(policy_, work_, obj.contour().bounds(), d);
    if (applied.is_zero()) return false;
    obj.move(applied);
    obj.define_contour();
    return true;
}

Bounds Mover::settled_bounds(const MoveableObject& object) const {
    auto settled = object.clone();
    settled->on_release();
    return object.contour().bounds().united(settled->contour().bounds());
}

bool Mover::move_node(Caught& c, std::size_t node, Delta d, Point mouse, Point previous_mouse) {
    switch (c.freedom) {
        case MovementFreedom::None: d = {0, 0}; break;
        case MovementFreedom::NS: d.dx = 0; break;
        case MovementFreedom::WE: d.dy = 0; break;
        case MovementFreedom::Any: break;
    }
    std::unique_ptr<MoveableObject>& slot = entries_[c.object].object;

    if (policy_.kind == ContainmentPolicy::Kind::Unrestricted) {
        if (!slot->move_contour_point(node, d, mouse, c.button)) return false;
        slot->define_contour();
        return true;
    }

    // Resizes are not clipped by the object itself, so each candidate change
    // is tried on a copy and kept only if the settled contour stays contained.
    if (!settled_) settled_ = settled_bounds(*slot);
    const bool was_contained = is_contained(policy_, work_, *settled_);
    auto attempt = [&](Delta dd, Point m) -> std::optional<std::unique_ptr<MoveableObject>> {
        auto candidate = slot->clone();
        if (!candidate->move_contour_point(node, dd, m, c.button)) return std::nullopt;
        candidate->define_contour();
        return candidate;
    };

    auto first = attempt(d, mouse);
    if (!first) return false;
    const Bounds first_settled = settled_bounds(**first);
    if (!was_contained || is_contained(policy_, work_, first_settled)) {
        slot = std::move(*first);
        settled_ = first_settled;
        return true;
    }
    const Delta clipped = apply_containment(policy_, work_, slot->contour().bounds(), d);
    for (const Delta dd : {clipped, Delta{clipped.dx, 0}, Delta{0, clipped.dy}}) {
        if (dd.is_zero()) continue;
        auto candidate = attempt(dd, previous_mouse + dd);
        if (!candidate) continue;
        const Bounds b = settled_bounds(**candidate);
        if (is_contained(policy_, work_, b)) {
            slot = std::move(*candidate);
            settled_ = b;
            return true;
        }
    }
    return false;
}

bool Mover::release() {
    const auto* c = std::get_if<Caught>(&state_);
    if (!c) return false;
    const std::size_t index = c->object;
    state_ = Idle{};
    was_caught_ = index;
    entries_[index].object->on_release();
    return true;
}

std::size_t Mover::was_caught_object() const {
    if (!was_caught_) throw std::logic_error("no object has been released yet");
    return *was_caught_;
}

SenseResult Mover::sense(Point p) const {
    const auto hit = find_hit(p);
    if (!hit) return {};
    const auto& [index, result] = *hit;
    return std::visit(detail::overloaded{
                          [](const Miss&) { return SenseResult{}; },
                          [&](const NodeHit& n) { return SenseResult{n.cursor, SenseResult::Over{index, GrabNode{n.node}}}; },
                          [&](const ConnectionHit& h) {
                              return SenseResult{h.cursor, SenseResult::Over{index, GrabConnection{h.connection}}};
                          },
                      },
                      result);
}

std::vector<RenderPrimitive> Mover::draw_contours() const {
    std::vector<RenderPrimitive> out;
    for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
        auto prims = it->object->contour().render_primitives();
        out.insert(out.end(), std::make_move_iterator(prims.begin()), std::make_move_iterator(prims.end()));
    }
    return out;
}

}  // namespace moveable
