#include "posetrack/kmeans.hpp"

#include <iostream>
#include <limits>

#include "posetrack/errors.hpp"

namespace posetrack {

namespace {

int nearest_centroid(const Vec2& p, const std::vector<Vec2>& centroids) {
    int best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (int c = 0; c < static_cast<int>(centroids.size()); ++c) {
        const double d = (p - centroids[c]).squared_norm();
        if (d < best_d) {
            best_d = d;
            best = c;
        }
    }
    return best;
}

} // namespace

KMeansResult kmeans(const std::vector<Vec2>& points, int k) {
    if (points.empty()) throw Error(ErrorCode::NoSamples, "kmeans needs at least one point");
    if (k < 1) throw Error(ErrorCode::NoClusters, "kmeans needs k >= 1");
    const int n = static_cast<int>(points.size());
    if (k > n) {
        std::cerr << "warning: kmeans requested " << k << " clusters for " << n
                  << " points; reducing k to " << n << "\n";
        k = n;
    }

    // Farthest-point seeding, fully deterministic.
    Vec2 data_mean;
    for (const Vec2& p : points) data_mean = data_mean + p;
    data_mean = data_mean * (1.0 / n);

    std::vector<Vec2> centroids;
    std::vector<double> nearest_sq(n, std::numeric_limits<double>::infinity());
    int first = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
        const double d = (points[i] - data_mean).squared_norm();
        if (d < best_d) {
            best_d = d;
            first = i;
        }
    }
    centroids.push_back(points[first]);
    while (static_cast<int>(centroids.size()) < k) {
        int farthest = 0;
        double far_d = -1.0;
        for (int i = 0; i < n; ++i) {
            const double d = (points[i] - centroids.back()).squared_norm();
            if (d < nearest_sq[i]) nearest_sq[i] = d;
            if (nearest_sq[i] > far_d) {
                far_d = nearest_sq[i];
                farthest = i;
            }
        }
        centroids.push_back(points[farthest]);
    }

    KMeansResult result;
    result.assignments.assign(n, -1);
    for (int iter = 0; iter < 100; ++iter) {
        std::vector<int> assignment(n);
        double wcss = 0.0;
        for (int i = 0; i < n; ++i) {
            assignment[i] = nearest_centroid(points[i], centroids);
            wcss += (points[i] - centroids[assignment[i]]).squared_norm();
        }
        result.wcss_history.push_back(wcss);
        ++result.iterations;

        const bool stable = assignment == result.assignments;
        result.assignments = assignment;
        if (stable) break;

        std::vector<Vec2> sums(centroids.size());
        std::vector<int> counts(centroids.size(), 0);
        for (int i = 0; i < n; ++i) {
            sums[assignment[i]] = sums[assignment[i]] + points[i];
            ++counts[assignment[i]];
        }
        std::vector<Vec2> updated;
        std::vector<int> remap(centroids.size(), -1);
        for (size_t c = 0; c < centroids.size(); ++c) {
            if (counts[c] == 0) continue; // empty cluster deleted
            remap[c] = static_cast<int>(updated.size());
            updated.push_back(sums[c] * (1.0 / counts[c]));
        }
        centroids = std::move(updated);
        for (int i = 0; i < n; ++i) result.assignments[i] = remap[result.assignments[i]];
    }
    result.centroids = std::move(centroids);
    return result;
}

} // namespace posetrack
