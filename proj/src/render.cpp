#include "posetrack/render.hpp"

#include "posetrack/draw.hpp"
#include "posetrack/errors.hpp"

namespace posetrack {

namespace {

const Rgb kPalette[] = {
    {0.95, 0.25, 0.25}, {0.25, 0.85, 0.25}, {0.25, 0.45, 0.95}, {0.95, 0.85, 0.20},
    {0.90, 0.30, 0.90}, {0.25, 0.85, 0.85}, {0.95, 0.60, 0.15}, {0.60, 0.20, 0.90},
    {0.15, 0.60, 0.40}, {0.75, 0.40, 0.15}, {0.40, 0.75, 0.55}, {0.55, 0.40, 0.75},
    {0.85, 0.75, 0.45}, {0.45, 0.85, 0.75}, {0.85, 0.45, 0.60}, {0.60, 0.85, 0.30},
};
constexpr int kPaletteSize = static_cast<int>(sizeof(kPalette) / sizeof(kPalette[0]));

} // namespace

Image render_overlay(const Image& frame, const Pose& pose, const SkeletonTopology& topology,
                     const OverlayStyle& style) {
    if (static_cast<int>(pose.positions.size()) != topology.part_count())
        throw Error(ErrorCode::LengthMismatch,
                    "pose has " + std::to_string(pose.positions.size()) + " joints for " +
                        std::to_string(topology.part_count()) + " parts");

    Image out = frame;
    for (int i = 0; i < topology.part_count(); ++i) {
        if (!topology.parent[i]) continue;
        const auto& child = pose.positions[i];
        const auto& parent = pose.positions[*topology.parent[i]];
        if (!child || !parent) continue;
        fill_capsule(out, *parent, *child, style.limb_radius, kPalette[i % kPaletteSize]);
    }
    for (int i = 0; i < topology.part_count(); ++i) {
        if (!pose.positions[i]) continue;
        fill_disc(out, *pose.positions[i], style.joint_radius, kPalette[i % kPaletteSize]);
    }
    return out;
}

} // namespace posetrack
