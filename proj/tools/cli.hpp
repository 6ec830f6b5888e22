#pragma once

#include <iosfwd>

namespace moveable {

// Exit codes: 0 success, 1 usage error, 2 malformed input, 3 impossible
// geometry in the input.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace moveable
