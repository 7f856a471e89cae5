#pragma once

#include <string>
#include <vector>

#include "posetrack/skeleton.hpp"

namespace posetrack {

// Tracker output for one clip, one pose row per frame.
struct PredictionFile {
    std::string clip;
    std::vector<std::string> parts;
    std::vector<Pose> poses;
};

PredictionFile load_predictions(const std::string& path);
void save_predictions(const PredictionFile& predictions, const std::string& path);

} // namespace posetrack
