#pragma once

#include <optional>
#include <string>
#include <vector>

#include "posetrack/geometry.hpp"

namespace posetrack {

// Per-clip joint annotation: part names plus one row of optional positions per
// frame.  Absent joints are stored as null on disk and nullopt in memory.
struct Annotation {
    std::vector<std::string> parts;
    std::vector<std::vector<std::optional<Vec2>>> frames;
};

Annotation load_annotation(const std::string& path);
void save_annotation(const Annotation& annotation, const std::string& path);

} // namespace posetrack
