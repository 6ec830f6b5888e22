#pragma once

#include <stdexcept>
#include <string>

namespace moveable {

// Thrown whenever a value would break a structural invariant: a dangling
// connection index, a non-positive node size, a ring whose inner radius is not
// below its outer radius, and so on.
class InvariantViolation : public std::invalid_argument {
public:
    explicit InvariantViolation(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace moveable
