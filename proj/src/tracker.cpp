#include "posetrack/tracker.hpp"

#include <cmath>
#include <iostream>

#include "posetrack/errors.hpp"

namespace posetrack {

TrackerConfig TrackerConfig::from_model(const PoseModel& model) {
    TrackerConfig config;
    config.lambda1 = model.lambda1;
    config.lambda2 = model.lambda2;
    config.window_radius = model.window_radius;
    return config;
}

namespace {

struct Window {
    int u0, u1, v0, v1; // inclusive candidate ranges
    int candidate_count() const { return (u1 - u0 + 1) * (v1 - v0 + 1); }
};

Window candidate_window(const IntegralSet& frame, const Vec2& previous, int radius,
                        const std::string& part_name) {
    const int cu = static_cast<int>(std::llround(previous.u));
    const int cv = static_cast<int>(std::llround(previous.v));
    Window w{std::max(cu - radius, 0), std::min(cu + radius, frame.width - 1),
             std::max(cv - radius, 0), std::min(cv + radius, frame.height - 1)};
    if (w.u0 > w.u1 || w.v0 > w.v1)
        throw Error(ErrorCode::WindowFullyOutsideImage,
                    "search window for part '" + part_name + "' around (" + std::to_string(previous.u) +
                        ", " + std::to_string(previous.v) + ") lies outside the image");
    if (w.candidate_count() < 9)
        std::cerr << "warning: search window for part '" << part_name << "' clipped to "
                  << w.candidate_count() << " candidates\n";
    return w;
}

/// Row-major scan of the window. The spatial clusters pointer is null for
/// the root, whose objective has no deformation term.
CandidateScore scan_window(const IntegralSet& frame, const Window& window, const Vec2& previous,
                           const PartDescriptor& templ, const GaussianParams& temporal_gaussian,
                           const std::vector<GaussianParams>* spatial_clusters, const Vec2& parent_position,
                           const PoseModel& model, const TrackerConfig& config, PartTrackStats* stats) {
    CandidateScore best;
    double best_disp_sq = 0.0;
    bool have_best = false;
    for (int v = window.v0; v <= window.v1; ++v) {
        for (int u = window.u0; u <= window.u1; ++u) {
            const Vec2 candidate(u, v);
            const PartDescriptor feature = extract_descriptor(frame, candidate, model.geometry);
            CandidateScore score;
            score.position = candidate;
            score.appearance = likeliness(feature, templ);
            score.temporal = mahalanobis(candidate - previous, temporal_gaussian);
            score.spatial = spatial_clusters ? spatial_cost(candidate - parent_position, *spatial_clusters) : 0.0;
            score.total = score.appearance + config.lambda1 * score.temporal + config.lambda2 * score.spatial;
            if (stats) {
                ++stats->candidates;
                if (spatial_clusters) stats->cluster_evaluations += static_cast<long>(spatial_clusters->size());
            }
            const double disp_sq = (candidate - previous).squared_norm();
            if (!have_best || score.total < best.total ||
                (score.total == best.total && disp_sq < best_disp_sq)) {
                best = score;
                best_disp_sq = disp_sq;
                have_best = true;
            }
        }
    }
    return best;
}

} // namespace

CandidateScore track_root(const IntegralSet& frame, const TrackState& state, const PoseModel& model,
                          const TrackerConfig& config, PartTrackStats* stats) {
    const int root = model.topology.root_index;
    const Vec2 previous = state.positions[root];
    const Window window = candidate_window(frame, previous, config.window_radius, model.topology.parts[root]);
    return scan_window(frame, window, previous, state.templates[root], model.temporal.per_part[root],
                       nullptr, Vec2(), model, config, stats);
}

CandidateScore track_part(int part, const IntegralSet& frame, const TrackState& state,
                          const Vec2& parent_position, const PoseModel& model, const TrackerConfig& config,
                          PartTrackStats* stats) {
    const Vec2 previous = state.positions[part];
    const Window window = candidate_window(frame, previous, config.window_radius, model.topology.parts[part]);
    return scan_window(frame, window, previous, state.templates[part], model.temporal.per_part[part],
                       &model.spatial.clusters_per_part[part], parent_position, model, config, stats);
}

TrackState track_frame(const IntegralSet& frame, const TrackState& state, const PoseModel& model,
                       const TrackerConfig& config, TrackStats* stats) {
    const int n = model.topology.part_count();
    if (stats) stats->per_part.assign(n, PartTrackStats{});

    std::vector<CandidateScore> chosen(n);
    for (int part : traversal_order(model.topology)) {
        PartTrackStats* part_stats = stats ? &stats->per_part[part] : nullptr;
        try {
            if (part == model.topology.root_index) {
                chosen[part] = track_root(frame, state, model, config, part_stats);
            } else {
                const Vec2 parent_position = chosen[*model.topology.parent[part]].position;
                chosen[part] = track_part(part, frame, state, parent_position, model, config, part_stats);
            }
        } catch (const Error& e) {
            throw Error(e.code(), "tracking part '" + model.topology.parts[part] + "' at frame " +
                                      std::to_string(state.frame_index + 1) + ": " + e.what());
        }
    }

    // Templates refresh only after the whole frame is placed, so the
    // appearance term never sees a half-updated frame.
    TrackState next;
    next.frame_index = state.frame_index + 1;
    next.positions.resize(n);
    next.templates.resize(n);
    for (int part = 0; part < n; ++part) {
        next.positions[part] = chosen[part].position;
        const PartDescriptor feature = extract_descriptor(frame, chosen[part].position, model.geometry);
        next.templates[part] = update_template(state.templates[part], feature, chosen[part].appearance);
    }
    return next;
}

namespace {

Pose to_pose(const TrackState& state) {
    Pose pose;
    pose.frame_index = state.frame_index;
    pose.positions.reserve(state.positions.size());
    for (const Vec2& p : state.positions) pose.positions.emplace_back(p);
    return pose;
}

std::vector<PartDescriptor> templates_at(const IntegralSet& frame, const std::vector<Vec2>& positions,
                                         const AnnulusGeometry& geometry) {
    std::vector<PartDescriptor> templates;
    templates.reserve(positions.size());
    for (const Vec2& p : positions) templates.push_back(extract_descriptor(frame, p, geometry));
    return templates;
}

} // namespace

std::vector<Pose> track_video(const FrameSource& frames, const Pose& first_pose, const PoseModel& model,
                              const TrackerConfig& config, const std::vector<Pose>* ground_truth) {
    const int n = model.topology.part_count();
    if (frames.count < 1) throw Error(ErrorCode::MissingFrame, "clip has no frames");
    if (static_cast<int>(first_pose.positions.size()) != n)
        throw Error(ErrorCode::LengthMismatch, "first pose has " + std::to_string(first_pose.positions.size()) +
                                                   " parts, topology has " + std::to_string(n));
    for (int i = 0; i < n; ++i) {
        if (!first_pose.positions[i])
            throw Error(ErrorCode::IncompleteFirstPose,
                        "part '" + model.topology.parts[i] + "' is unannotated in the first frame");
    }
    if (config.reinit_interval) {
        if (*config.reinit_interval < 1)
            throw Error(ErrorCode::MissingGroundTruthForReinit, "reinit interval must be >= 1");
        if (!ground_truth)
            throw Error(ErrorCode::MissingGroundTruthForReinit,
                        "reinit interval set but no ground truth supplied");
        if (static_cast<int>(ground_truth->size()) < frames.count)
            throw Error(ErrorCode::MissingGroundTruthForReinit,
                        "ground truth covers " + std::to_string(ground_truth->size()) + " of " +
                            std::to_string(frames.count) + " frames");
    }

    TrackState state;
    state.frame_index = 0;
    for (const auto& p : first_pose.positions) state.positions.push_back(*p);
    {
        const IntegralSet first = build_integral(frames.get(0));
        state.templates = templates_at(first, state.positions, model.geometry);
    }

    std::vector<Pose> track;
    track.reserve(frames.count);
    Pose initial = first_pose;
    initial.frame_index = 0;
    track.push_back(std::move(initial));

    for (int t = 1; t < frames.count; ++t) {
        const IntegralSet integrals = build_integral(frames.get(t));
        if (config.reinit_interval && t % *config.reinit_interval == 0) {
            // Re-anchor on ground truth, like a fresh first-frame annotation.
            // Joints unannotated at the reinit frame keep their tracked state.
            const Pose& gt = (*ground_truth)[t];
            state.frame_index = t;
            for (int i = 0; i < n; ++i) {
                if (i < static_cast<int>(gt.positions.size()) && gt.positions[i])
                    state.positions[i] = *gt.positions[i];
            }
            state.templates = templates_at(integrals, state.positions, model.geometry);
        } else {
            state = track_frame(integrals, state, model, config);
        }
        track.push_back(to_pose(state));
    }
    return track;
}

} // namespace posetrack
