#include "posetrack/descriptor.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <string>

#include "posetrack/errors.hpp"

namespace posetrack {

AnnulusGeometry AnnulusGeometry::square_rings(int m, int stride) {
    AnnulusGeometry geometry;
    for (int i = 1; i <= m; ++i) {
        geometry.half_widths.push_back(i * stride);
        geometry.half_heights.push_back(i * stride);
    }
    validate(geometry);
    return geometry;
}

void validate(const AnnulusGeometry& geometry) {
    const int m = geometry.ring_count();
    if (m < 1) throw Error(ErrorCode::InvalidGeometry, "annulus geometry needs at least one ring");
    if (static_cast<int>(geometry.half_heights.size()) != m)
        throw Error(ErrorCode::InvalidGeometry, "half_widths and half_heights differ in length");
    for (int i = 0; i < m; ++i) {
        if (geometry.half_widths[i] < 0 || geometry.half_heights[i] < 0)
            throw Error(ErrorCode::InvalidGeometry, "negative ring extent at ring " + std::to_string(i + 1));
        if (i > 0 && (geometry.half_widths[i] <= geometry.half_widths[i - 1] ||
                      geometry.half_heights[i] <= geometry.half_heights[i - 1]))
            throw Error(ErrorCode::InvalidGeometry, "ring extents must be strictly ascending");
    }
}

PartDescriptor extract_descriptor(const IntegralSet& integrals, const Vec2& center,
                                  const AnnulusGeometry& geometry) {
    validate(geometry);
    const int cu = static_cast<int>(std::llround(center.u));
    const int cv = static_cast<int>(std::llround(center.v));
    if (cu < 0 || cu >= integrals.width || cv < 0 || cv >= integrals.height)
        throw Error(ErrorCode::CenterOutsideImage,
                    "descriptor center (" + std::to_string(center.u) + ", " + std::to_string(center.v) +
                        ") lies outside a " + std::to_string(integrals.width) + "x" +
                        std::to_string(integrals.height) + " image");

    const int m = geometry.ring_count();
    PartDescriptor descriptor(static_cast<size_t>(9) * m, 0.0);
    for (int p = 0; p < 3; ++p) {
        for (int g = 0; g < 3; ++g) {
            const IntegralImage& channel = integrals.channel(p, g);
            double inner_sum = 0.0;
            std::int64_t inner_area = 0;
            for (int i = 0; i < m; ++i) {
                const PixelRect rect{cv - geometry.half_heights[i], cu - geometry.half_widths[i],
                                     cv + geometry.half_heights[i], cu + geometry.half_widths[i]};
                const RectSum outer = rect_sum(channel, rect);
                const double ring_sum = outer.sum - inner_sum;
                const std::int64_t ring_area = outer.area - inner_area;
                const size_t idx = (static_cast<size_t>(p) * 3 + g) * m + i;
                descriptor[idx] = ring_area > 0 ? ring_sum / static_cast<double>(ring_area) : 0.0;
                inner_sum = outer.sum;
                inner_area = outer.area;
            }
        }
    }
    return descriptor;
}

PartDescriptor extract_descriptor_per_pixel(const Image& image, const GradientMaps& gradients,
                                            const Vec2& center, const AnnulusGeometry& geometry) {
    validate(geometry);
    const int cu = static_cast<int>(std::llround(center.u));
    const int cv = static_cast<int>(std::llround(center.v));
    if (cu < 0 || cu >= image.width || cv < 0 || cv >= image.height)
        throw Error(ErrorCode::CenterOutsideImage,
                    "descriptor center (" + std::to_string(center.u) + ", " + std::to_string(center.v) +
                        ") lies outside a " + std::to_string(image.width) + "x" +
                        std::to_string(image.height) + " image");

    const int m = geometry.ring_count();
    PartDescriptor sums(static_cast<size_t>(9) * m, 0.0);
    std::vector<std::int64_t> areas(static_cast<size_t>(m), 0);

    const int hw = geometry.half_widths[m - 1];
    const int hh = geometry.half_heights[m - 1];
    for (int r = std::max(0, cv - hh); r <= std::min(image.height - 1, cv + hh); ++r) {
        for (int c = std::max(0, cu - hw); c <= std::min(image.width - 1, cu + hw); ++c) {
            const int dr = std::abs(r - cv);
            const int dc = std::abs(c - cu);
            int ring = -1;
            for (int i = 0; i < m; ++i) {
                if (dr <= geometry.half_heights[i] && dc <= geometry.half_widths[i]) {
                    ring = i;
                    break;
                }
            }
            if (ring < 0) continue;
            ++areas[ring];
            for (int p = 0; p < 3; ++p) {
                const size_t px = static_cast<size_t>(r) * image.width + c;
                sums[(static_cast<size_t>(p) * 3 + 0) * m + ring] += image.planes[p][px];
                sums[(static_cast<size_t>(p) * 3 + 1) * m + ring] += gradients.du_abs[p][px];
                sums[(static_cast<size_t>(p) * 3 + 2) * m + ring] += gradients.dv_abs[p][px];
            }
        }
    }

    PartDescriptor descriptor(static_cast<size_t>(9) * m, 0.0);
    for (int p = 0; p < 3; ++p)
        for (int g = 0; g < 3; ++g)
            for (int i = 0; i < m; ++i) {
                const size_t idx = (static_cast<size_t>(p) * 3 + g) * m + i;
                descriptor[idx] = areas[i] > 0 ? sums[idx] / static_cast<double>(areas[i]) : 0.0;
            }
    return descriptor;
}

double likeliness(const PartDescriptor& feature, const PartDescriptor& templ) {
    if (feature.size() != templ.size())
        throw Error(ErrorCode::LengthMismatch, "feature length " + std::to_string(feature.size()) +
                                                   " vs template length " + std::to_string(templ.size()));
    double sum_sq = 0.0;
    for (size_t i = 0; i < feature.size(); ++i) {
        const double d = feature[i] - templ[i];
        sum_sq += d * d;
    }
    return std::sqrt(sum_sq);
}

PartDescriptor update_template(const PartDescriptor& templ, const PartDescriptor& feature, double l) {
    if (feature.size() != templ.size())
        throw Error(ErrorCode::LengthMismatch, "feature length " + std::to_string(feature.size()) +
                                                   " vs template length " + std::to_string(templ.size()));
    if (l < 0.0) throw std::invalid_argument("likeliness must be non-negative");
    const double alpha = std::exp(-l);
    PartDescriptor blended(templ.size());
    for (size_t i = 0; i < templ.size(); ++i) blended[i] = alpha * feature[i] + (1.0 - alpha) * templ[i];
    return blended;
}

} // namespace posetrack
