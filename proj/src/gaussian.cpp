#include "posetrack/gaussian.hpp"

#include <cmath>
#include <string>

#include "posetrack/errors.hpp"

namespace posetrack {

GaussianParams GaussianParams::from_moments(const Vec2& mean, const Mat2& covariance) {
    if (std::abs(covariance.b - covariance.c) > 1e-12 * (1.0 + std::abs(covariance.b)))
        throw Error(ErrorCode::CorruptFile, "covariance is not symmetric");
    if (covariance.det() <= 0.0 || covariance.a <= 0.0)
        throw Error(ErrorCode::CorruptFile, "covariance is not positive-definite");
    GaussianParams g;
    g.mean = mean;
    g.covariance = covariance;
    g.inverse_covariance = covariance.inverse();
    return g;
}

GaussianParams fit_gaussian(const std::vector<Vec2>& samples, double epsilon) {
    if (samples.empty()) throw Error(ErrorCode::NoSamples, "fit_gaussian needs at least one sample");
    const double n = static_cast<double>(samples.size());
    Vec2 mean;
    for (const Vec2& s : samples) mean = mean + s;
    mean = mean * (1.0 / n);

    Mat2 scatter;
    for (const Vec2& s : samples) {
        const Vec2 d = s - mean;
        scatter.a += d.u * d.u;
        scatter.b += d.u * d.v;
        scatter.d += d.v * d.v;
    }
    scatter.a = scatter.a / n + epsilon;
    scatter.b /= n;
    scatter.c = scatter.b;
    scatter.d = scatter.d / n + epsilon;
    return GaussianParams::from_moments(mean, scatter);
}

double mahalanobis(const Vec2& e, const GaussianParams& g) {
    const Vec2 d = e - g.mean;
    return d.dot(g.inverse_covariance.mul(d));
}

} // namespace posetrack
