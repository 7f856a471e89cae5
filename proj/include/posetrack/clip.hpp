#pragma once

#include <string>
#include <vector>

#include "posetrack/annotation.hpp"
#include "posetrack/models.hpp"
#include "posetrack/tracker.hpp"

namespace posetrack {

// One entry of a dataset manifest.  Relative paths are resolved against the
// manifest file's directory.  An empty frame list means "discover by name".
struct ClipManifest {
    std::string id;
    std::string frames_dir;
    std::vector<std::string> frames;
    std::string annotation;
    std::string split; // "train" or "test"
};

struct DatasetManifest {
    std::vector<ClipManifest> clips;
};

DatasetManifest load_manifest(const std::string& path);
void save_manifest(const DatasetManifest& manifest, const std::string& path);

// Frame filenames under dir with a .png/.jpg/.jpeg extension, sorted by name.
std::vector<std::string> discover_frames(const std::string& dir);

// A clip ready for tracking: resolved frame paths plus aligned annotations.
// Frames decode lazily through source().
struct Clip {
    std::string id;
    std::vector<std::string> frame_paths;
    Annotation annotation;

    FrameSource source() const;
    TrainingClip training() const;
};

// expected_parts, when non-empty, must match the annotation's part list
// exactly and in order.  The annotation must cover every frame; extra rows
// past the last frame are kept (reinitialization may consume them).
Clip load_clip(const ClipManifest& manifest, const std::string& base_dir,
               const std::vector<std::string>& expected_parts = {});

} // namespace posetrack
