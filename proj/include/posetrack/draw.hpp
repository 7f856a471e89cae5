#pragma once

#include "posetrack/geometry.hpp"
#include "posetrack/image.hpp"

namespace posetrack {

struct Rgb {
    double r = 0.0;
    double g = 0.0;
    double b = 0.0;
};

// All rasterizers test pixel centers at integer coordinates against exact
// geometry, so output is deterministic for identical inputs.

// Pixels with squared distance to `center` <= radius^2.
void fill_disc(Image& image, const Vec2& center, double radius, const Rgb& color);

// Pixels within `radius` of the segment a-b (rounded caps).
void fill_capsule(Image& image, const Vec2& a, const Vec2& b, double radius, const Rgb& color);

// Capsule with bands of `first`/`second` alternating every `stripe` pixels
// along the a-to-b axis.  Gives limbs a direction-dependent texture.
void fill_capsule_striped(Image& image, const Vec2& a, const Vec2& b, double radius,
                          const Rgb& first, const Rgb& second, double stripe);

} // namespace posetrack
