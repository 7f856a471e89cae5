#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "posetrack/descriptor.hpp"
#include "posetrack/models.hpp"
#include "posetrack/skeleton.hpp"

namespace posetrack {

/// The only tie-break policy: equal totals resolve to the smallest
/// displacement from the previous position, then row-major scan order.
inline constexpr const char* kTieBreakPolicy = "min-displacement-then-row-major";

struct TrackerConfig {
    double lambda1 = 0.7;
    double lambda2 = 0.2;
    int window_radius = 15;
    std::optional<int> reinit_interval;
    std::string tie_break = kTieBreakPolicy;

    /// Copies the tracking constants stored in a fitted model.
    static TrackerConfig from_model(const PoseModel& model);
};

/// Per-part positions and appearance templates carried frame to frame.
struct TrackState {
    std::vector<Vec2> positions;
    std::vector<PartDescriptor> templates;
    int frame_index = 0;
};

/// Score of one window candidate, split into the three objective terms.
/// total = appearance + lambda1 * temporal + lambda2 * spatial.
struct CandidateScore {
    Vec2 position;
    double appearance = 0.0;
    double temporal = 0.0;
    double spatial = 0.0; // 0 for the root
    double total = 0.0;
};

struct PartTrackStats {
    int candidates = 0;
    long cluster_evaluations = 0;
};

struct TrackStats {
    std::vector<PartTrackStats> per_part;
};

/// Minimizes appearance + lambda1 * temporal over the window around the
/// root's previous position.
CandidateScore track_root(const IntegralSet& frame, const TrackState& state, const PoseModel& model,
                          const TrackerConfig& config, PartTrackStats* stats = nullptr);

/// Minimizes the full three-term objective for one non-root part; the
/// parent must already be placed in the current frame.
CandidateScore track_part(int part, const IntegralSet& frame, const TrackState& state,
                          const Vec2& parent_position, const PoseModel& model,
                          const TrackerConfig& config, PartTrackStats* stats = nullptr);

/// Tracks every part in traversal order, then refreshes all templates
/// from the chosen positions.
TrackState track_frame(const IntegralSet& frame, const TrackState& state, const PoseModel& model,
                       const TrackerConfig& config, TrackStats* stats = nullptr);

/// Lazily decoded frame sequence.
struct FrameSource {
    int count = 0;
    std::function<Image(int)> get;
};

/// Builds the initial state from the annotated first frame and tracks the
/// pose through the whole clip. With a reinit interval, state is reset
/// from ground truth every interval frames.
std::vector<Pose> track_video(const FrameSource& frames, const Pose& first_pose, const PoseModel& model,
                              const TrackerConfig& config,
                              const std::vector<Pose>* ground_truth = nullptr);

} // namespace posetrack
