#pragma once

#include <vector>

#include "posetrack/geometry.hpp"

namespace posetrack {

/// Bivariate Gaussian over pixel displacements, with the inverse
/// covariance cached for the Mahalanobis form.
struct GaussianParams {
    Vec2 mean;
    Mat2 covariance;         // symmetric positive-definite
    Mat2 inverse_covariance; // cached

    /// Validates symmetry/positive-definiteness and caches the inverse.
    static GaussianParams from_moments(const Vec2& mean, const Mat2& covariance);
};

/// Sample mean and maximum-likelihood (1/N) covariance, regularized with
/// epsilon on the diagonal so the inverse always exists.
GaussianParams fit_gaussian(const std::vector<Vec2>& samples, double epsilon);

/// Quadratic form (e - mean)^T Sigma^{-1} (e - mean).
double mahalanobis(const Vec2& e, const GaussianParams& g);

} // namespace posetrack
