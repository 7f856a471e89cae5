#include "posetrack/draw.hpp"

#include <algorithm>
#include <cmath>

namespace posetrack {

namespace {

void set_pixel(Image& image, int row, int col, const Rgb& color) {
    image.at(0, row, col) = color.r;
    image.at(1, row, col) = color.g;
    image.at(2, row, col) = color.b;
}

struct Box {
    int r0, c0, r1, c1;
    bool empty;
};

Box clipped_box(const Image& image, double u_min, double v_min, double u_max, double v_max) {
    Box box;
    box.r0 = std::max(0, static_cast<int>(std::floor(v_min)));
    box.c0 = std::max(0, static_cast<int>(std::floor(u_min)));
    box.r1 = std::min(image.height - 1, static_cast<int>(std::ceil(v_max)));
    box.c1 = std::min(image.width - 1, static_cast<int>(std::ceil(u_max)));
    box.empty = box.r0 > box.r1 || box.c0 > box.c1;
    return box;
}

} // namespace

void fill_disc(Image& image, const Vec2& center, double radius, const Rgb& color) {
    const Box box = clipped_box(image, center.u - radius, center.v - radius, center.u + radius,
                                center.v + radius);
    if (box.empty) return;
    const double r2 = radius * radius;
    for (int r = box.r0; r <= box.r1; ++r)
        for (int c = box.c0; c <= box.c1; ++c) {
            const double du = c - center.u;
            const double dv = r - center.v;
            if (du * du + dv * dv <= r2) set_pixel(image, r, c, color);
        }
}

void fill_capsule(Image& image, const Vec2& a, const Vec2& b, double radius, const Rgb& color) {
    fill_capsule_striped(image, a, b, radius, color, color, 0.0);
}

void fill_capsule_striped(Image& image, const Vec2& a, const Vec2& b, double radius,
                          const Rgb& first, const Rgb& second, double stripe) {
    const Box box = clipped_box(image, std::min(a.u, b.u) - radius, std::min(a.v, b.v) - radius,
                                std::max(a.u, b.u) + radius, std::max(a.v, b.v) + radius);
    if (box.empty) return;
    const Vec2 axis = b - a;
    const double len_sq = axis.squared_norm();
    const double r2 = radius * radius;
    for (int r = box.r0; r <= box.r1; ++r)
        for (int c = box.c0; c <= box.c1; ++c) {
            const Vec2 p{static_cast<double>(c), static_cast<double>(r)};
            double t = len_sq > 0.0 ? std::clamp((p - a).dot(axis) / len_sq, 0.0, 1.0) : 0.0;
            const Vec2 nearest = a + axis * t;
            if ((p - nearest).squared_norm() > r2) continue;
            bool band = stripe > 0.0 &&
                        (static_cast<long long>(std::floor(t * std::sqrt(len_sq) / stripe)) % 2) != 0;
            set_pixel(image, r, c, band ? second : first);
        }
}

} // namespace posetrack
