#pragma once

#include <cmath>

namespace posetrack {

/// Image-plane point or displacement. u runs along columns (horizontal),
/// v along rows (vertical).
struct Vec2 {
    double u = 0.0;
    double v = 0.0;

    Vec2() = default;
    Vec2(double u_, double v_) : u(u_), v(v_) {}

    Vec2 operator+(const Vec2& o) const { return {u + o.u, v + o.v}; }
    Vec2 operator-(const Vec2& o) const { return {u - o.u, v - o.v}; }
    Vec2 operator*(double s) const { return {u * s, v * s}; }
    bool operator==(const Vec2& o) const { return u == o.u && v == o.v; }

    double dot(const Vec2& o) const { return u * o.u + v * o.v; }
    double norm() const { return std::sqrt(u * u + v * v); }
    double squared_norm() const { return u * u + v * v; }
};

/// 2x2 matrix, row-major: [[a, b], [c, d]].
struct Mat2 {
    double a = 0.0, b = 0.0, c = 0.0, d = 0.0;

    double det() const { return a * d - b * c; }
    double trace() const { return a + d; }

    Vec2 mul(const Vec2& x) const { return {a * x.u + b * x.v, c * x.u + d * x.v}; }

    // Adjugate-based inverse; caller guarantees det != 0.
    Mat2 inverse() const {
        const double inv_det = 1.0 / det();
        return {d * inv_det, -b * inv_det, -c * inv_det, a * inv_det};
    }

    Mat2 mul(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }

    // Eigenvalues of a symmetric 2x2, smallest first.
    void symmetric_eigenvalues(double& lo, double& hi) const {
        const double mean = 0.5 * trace();
        const double diff = 0.5 * (a - d);
        const double radius = std::sqrt(diff * diff + b * c);
        lo = mean - radius;
        hi = mean + radius;
    }

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
};

} // namespace posetrack
