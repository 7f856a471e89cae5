#include "posetrack/models.hpp"

#include <limits>

#include "posetrack/errors.hpp"
#include "posetrack/kmeans.hpp"

namespace posetrack {

TemporalModel fit_temporal(const std::vector<TrainingClip>& clips, const SkeletonTopology& topology,
                           double epsilon) {
    validate(topology);
    const int n = topology.part_count();
    TemporalModel model;
    model.per_part.reserve(n);
    for (int part = 0; part < n; ++part) {
        std::vector<Vec2> displacements;
        for (const TrainingClip& clip : clips) {
            for (size_t t = 1; t < clip.frames.size(); ++t) {
                const auto& prev = clip.frames[t - 1][part];
                const auto& cur = clip.frames[t][part];
                if (prev && cur) displacements.push_back(*cur - *prev);
            }
        }
        if (displacements.empty())
            throw Error(ErrorCode::PartNeverObserved,
                        "no annotated frame pair for part '" + topology.parts[part] + "'");
        model.per_part.push_back(fit_gaussian(displacements, epsilon));
    }
    return model;
}

SpatialModel fit_spatial(const std::vector<TrainingClip>& clips, const SkeletonTopology& topology,
                         int k, double epsilon) {
    validate(topology);
    const int n = topology.part_count();
    SpatialModel model;
    model.clusters_per_part.resize(n);
    for (int part = 0; part < n; ++part) {
        if (!topology.parent[part]) continue; // root has no spatial term
        const int parent = *topology.parent[part];
        std::vector<Vec2> offsets;
        for (const TrainingClip& clip : clips) {
            for (const auto& frame : clip.frames) {
                if (frame[part] && frame[parent]) offsets.push_back(*frame[part] - *frame[parent]);
            }
        }
        if (offsets.empty())
            throw Error(ErrorCode::PartNeverObserved,
                        "no annotated frame with both '" + topology.parts[part] + "' and its parent");
        const KMeansResult clustered = kmeans(offsets, k);
        std::vector<std::vector<Vec2>> members(clustered.centroids.size());
        for (size_t i = 0; i < offsets.size(); ++i) members[clustered.assignments[i]].push_back(offsets[i]);
        for (const auto& cluster_points : members)
            model.clusters_per_part[part].push_back(fit_gaussian(cluster_points, epsilon));
    }
    return model;
}

double spatial_cost(const Vec2& e, const std::vector<GaussianParams>& clusters) {
    if (clusters.empty()) throw Error(ErrorCode::NoClusters, "spatial_cost needs at least one cluster");
    double best = std::numeric_limits<double>::infinity();
    for (const GaussianParams& g : clusters) {
        const double cost = mahalanobis(e, g);
        if (cost < best) best = cost;
    }
    return best;
}

PoseModel fit_model(const std::vector<TrainingClip>& clips, const SkeletonTopology& topology,
                    const AnnulusGeometry& geometry, int k, double epsilon) {
    PoseModel model;
    model.topology = topology;
    model.geometry = geometry;
    model.cluster_count = k;
    model.epsilon = epsilon;
    model.temporal = fit_temporal(clips, topology, epsilon);
    model.spatial = fit_spatial(clips, topology, k, epsilon);
    return model;
}

} // namespace posetrack
