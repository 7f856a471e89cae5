#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "posetrack/descriptor.hpp"
#include "posetrack/gaussian.hpp"
#include "posetrack/skeleton.hpp"

namespace posetrack {

/// One training clip: per-frame, per-part optional positions aligned with
/// the topology part order. Absent entries are skipped while fitting.
struct TrainingClip {
    std::string id;
    std::vector<std::vector<std::optional<Vec2>>> frames;
};

/// Per-part Gaussian over the frame-to-frame displacement, root included.
struct TemporalModel {
    std::vector<GaussianParams> per_part;
};

/// Per non-root part, one Gaussian per k-means cluster of the
/// child-relative-to-parent offsets. Entry for the root stays empty.
struct SpatialModel {
    std::vector<std::vector<GaussianParams>> clusters_per_part;
};

struct PoseModel {
    SkeletonTopology topology;
    TemporalModel temporal;
    SpatialModel spatial;
    AnnulusGeometry geometry;
    double lambda1 = 0.7;
    double lambda2 = 0.2;
    int window_radius = 15;
    int cluster_count = 6;
    double epsilon = 1e-4;
};

TemporalModel fit_temporal(const std::vector<TrainingClip>& clips, const SkeletonTopology& topology,
                           double epsilon);

SpatialModel fit_spatial(const std::vector<TrainingClip>& clips, const SkeletonTopology& topology,
                         int k, double epsilon);

/// Minimum Mahalanobis cost over the part's cluster Gaussians; equal
/// values resolve to the lowest cluster index.
double spatial_cost(const Vec2& e, const std::vector<GaussianParams>& clusters);

/// Fits both statistical models and packages them with the given
/// descriptor geometry and tracking constants.
PoseModel fit_model(const std::vector<TrainingClip>& clips, const SkeletonTopology& topology,
                    const AnnulusGeometry& geometry, int k, double epsilon);

void save_model(const PoseModel& model, const std::filesystem::path& path);
PoseModel load_model(const std::filesystem::path& path);

} // namespace posetrack
