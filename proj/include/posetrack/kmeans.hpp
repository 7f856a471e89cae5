#pragma once

#include <vector>

#include "posetrack/geometry.hpp"

namespace posetrack {

struct KMeansResult {
    std::vector<Vec2> centroids;
    std::vector<int> assignments; // per input point
    std::vector<double> wcss_history; // within-cluster sum of squares per iteration
    int iterations = 0;
};

/// Lloyd iterations with deterministic farthest-point seeding: the first
/// centroid is the point closest to the data mean, each next one the point
/// farthest from its nearest chosen centroid. Empty clusters are deleted.
/// Converges when assignments stabilize or after 100 iterations.
/// k larger than the point count is reduced with a warning.
KMeansResult kmeans(const std::vector<Vec2>& points, int k);

} // namespace posetrack
