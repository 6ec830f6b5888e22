#pragma once

#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "moveable/contour.hpp"
#include "moveable/geometry.hpp"
#include "moveable/render.hpp"

namespace moveable {

enum class MouseButton { Left, Right };

// Anything a Mover can move or resize.
//
// Implementations own their geometry and describe it through a contour; the
// Mover reads only the contour and calls back through move() and
// move_contour_point(). Rebuilding the contour after a successful change is
// the caller's job (see define_contour).
class MoveableObject {
public:
    virtual ~MoveableObject() = default;

    // Rebuilds the contour from the current geometry.
    void define_contour() { contour_ = make_contour(); }

    // Valid once the derived constructor has called define_contour().
    const Contour& contour() const { return *contour_; }

    // Translates every basic point by d; sizes never change.
    virtual void move(Delta d) = 0;

    // Individual movement of node i. Returns true iff the geometry changed;
    // a false return leaves the object untouched.
    virtual bool move_contour_point(std::size_t i, Delta d, Point mouse, MouseButton button) = 0;

    // End-of-gesture hook, called by the Mover on release of this object.
    virtual void on_release() {}

    virtual std::string_view type_tag() const = 0;
    virtual Rect bounds() const = 0;
    virtual std::vector<RenderPrimitive> appearance() const = 0;
    virtual std::unique_ptr<MoveableObject> clone() const = 0;

protected:
    MoveableObject() = default;
    MoveableObject(const MoveableObject&) = default;
    MoveableObject& operator=(const MoveableObject&) = default;

    virtual Contour make_contour() const = 0;

private:
    std::optional<Contour> contour_;
};

template <class Derived>
class MoveableBase : public MoveableObject {
public:
    std::unique_ptr<MoveableObject> clone() const override {
        return std::make_unique<Derived>(static_cast<const Derived&>(*this));
    }
};

}  // namespace moveable
