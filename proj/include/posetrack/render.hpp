#pragma once

#include "posetrack/image.hpp"
#include "posetrack/skeleton.hpp"

namespace posetrack {

struct OverlayStyle {
    double joint_radius = 3.0;
    double limb_radius = 1.5;
};

// Copies the frame and draws parent-child limbs plus joint discs, colored
// by part index from a fixed palette.  Joints without a position (and limbs
// missing an endpoint) are skipped.  Deterministic for fixed inputs.
Image render_overlay(const Image& frame, const Pose& pose, const SkeletonTopology& topology,
                     const OverlayStyle& style = {});

} // namespace posetrack
