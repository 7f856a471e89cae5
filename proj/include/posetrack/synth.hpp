#pragma once

#include <string>
#include <vector>

#include "posetrack/clip.hpp"
#include "posetrack/geometry.hpp"
#include "posetrack/image.hpp"
#include "posetrack/skeleton.hpp"

namespace posetrack {

// One scripted joint motion: the named part and its whole subtree rotate
// about the part's parent by amplitude * wave(2*pi*t/period + phase).
struct Oscillation {
    std::string part;
    double amplitude_deg = 0.0;
    double period = 15.0;
    double phase = 0.0;
    bool square = false; // square wave snaps between the two extremes
};

// Deterministic articulated-figure clip: a textured stick figure on a noise
// background, translating rigidly with optional per-joint oscillations.
struct MotionScript {
    std::string id = "synthetic";
    int width = 320;
    int height = 240;
    int frames = 30;
    unsigned seed = 7;
    Vec2 anchor{100.0, 44.0}; // head position at frame 0
    Vec2 translation{0.0, 0.0}; // per-frame rigid motion, pixels
    std::vector<Oscillation> oscillations;
    std::string split = "train";
    double joint_radius = 6.0;
};

MotionScript load_motion_script(const std::string& path);
void save_motion_script(const MotionScript& script, const std::string& path);

// 14-part tree rooted at the head: neck under head, shoulders and hips under
// neck, then elbow/wrist and knee/ankle chains.
SkeletonTopology figure_topology();

// Exact joint positions at frame t (the ground truth the renderer draws).
std::vector<Vec2> figure_pose(const MotionScript& script, int frame);

// Shared static background for every frame of a clip.
Image figure_background(const MotionScript& script);

// Background plus striped limb capsules and per-part colored joint discs.
// Values are quantized to 8 bits so PNG round-trips reproduce them exactly.
Image render_figure(const MotionScript& script, const Image& background,
                    const std::vector<Vec2>& pose);

// Writes frames/frame_%04d.png, annotation.json, and manifest.json under
// out_dir; returns the manifest entry (paths relative to out_dir).
ClipManifest synth_generate(const MotionScript& script, const std::string& out_dir);

} // namespace posetrack
