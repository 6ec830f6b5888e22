#pragma once

#include <string>
#include <vector>

#include "moveable/scene.hpp"
#include "moveable/trace.hpp"

namespace moveable {

// One demonstration: a small scene holding a single object and a scripted
// gesture sequence exercising its nodes and connections.
struct GalleryCase {
    int number = 0;     // 1..12
    std::string name;   // file-name friendly, e.g. "rect_corners_squares"
    std::string title;  // one line for listings
    Scene scene;
    std::vector<TraceEvent> trace;
};

std::vector<GalleryCase> gallery_cases();

// All gallery objects side by side on one 1200 x 800 surface.
Scene combined_gallery();

// "caseNN_name"
std::string case_stem(const GalleryCase& c);

}  // namespace moveable
