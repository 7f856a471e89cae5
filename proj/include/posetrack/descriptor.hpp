#pragma once

#include <vector>

#include "posetrack/geometry.hpp"
#include "posetrack/image.hpp"
#include "posetrack/integral.hpp"

namespace posetrack {

/// m nested rectangles centered on a part, given by their half extents in
/// pixels (strictly ascending). Ring i sums over R_i minus R_{i-1}.
struct AnnulusGeometry {
    std::vector<int> half_widths;
    std::vector<int> half_heights;

    int ring_count() const { return static_cast<int>(half_widths.size()); }

    /// Square rings with half extent i * stride for ring i = 1..m.
    static AnnulusGeometry square_rings(int m, int stride);
};

void validate(const AnnulusGeometry& geometry);

/// 9m-vector of area-normalized annular sums. Layout is plane-major:
/// entry ((plane * 3) + channel) * m + ring, channels ordered intensity,
/// |horizontal gradient|, |vertical gradient|.
using PartDescriptor = std::vector<double>;

/// Extracts the descriptor at `center` (rounded to the nearest pixel).
/// Rings reaching past the borders are clipped and normalized by their
/// clipped area; a fully clipped ring contributes 0.
PartDescriptor extract_descriptor(const IntegralSet& integrals, const Vec2& center,
                                  const AnnulusGeometry& geometry);

/// Same descriptor computed by visiting every pixel and bucketing it into
/// its ring. Linear in ring area rather than ring count; kept as the slow
/// reference path for benchmarking.
PartDescriptor extract_descriptor_per_pixel(const Image& image, const GradientMaps& gradients,
                                            const Vec2& center, const AnnulusGeometry& geometry);

/// Euclidean distance between a candidate descriptor and the template.
double likeliness(const PartDescriptor& feature, const PartDescriptor& templ);

/// Blends the freshly extracted feature into the running template with
/// weight alpha = exp(-l).
PartDescriptor update_template(const PartDescriptor& templ, const PartDescriptor& feature, double l);

} // namespace posetrack
