#include "posetrack/integral.hpp"

#include <algorithm>

#include "posetrack/errors.hpp"

namespace posetrack {

IntegralImage::IntegralImage(const double* plane, int width, int height)
    : width_(width), height_(height), grid_(static_cast<size_t>(width + 1) * (height + 1), 0.0) {
    // Single pass: running row sum plus the row above.
    const size_t stride = static_cast<size_t>(width) + 1;
    for (int r = 0; r < height; ++r) {
        double row_sum = 0.0;
        const double* src = plane + static_cast<size_t>(r) * width;
        const double* above = grid_.data() + static_cast<size_t>(r) * stride;
        double* out = grid_.data() + static_cast<size_t>(r + 1) * stride;
        for (int c = 0; c < width; ++c) {
            row_sum += src[c];
            out[c + 1] = above[c + 1] + row_sum;
        }
    }
}

RectSum rect_sum(const IntegralImage& integral, const PixelRect& rect) {
    const int r0 = std::max(rect.row0, 0);
    const int c0 = std::max(rect.col0, 0);
    const int r1 = std::min(rect.row1, integral.height() - 1);
    const int c1 = std::min(rect.col1, integral.width() - 1);
    if (r0 > r1 || c0 > c1) return {0.0, 0};
    const double sum = integral.prefix(r1 + 1, c1 + 1) - integral.prefix(r0, c1 + 1) -
                       integral.prefix(r1 + 1, c0) + integral.prefix(r0, c0);
    const std::int64_t area = static_cast<std::int64_t>(r1 - r0 + 1) * (c1 - c0 + 1);
    return {sum, area};
}

IntegralSet build_integral(const Image& image) {
    if (image.width <= 0 || image.height <= 0)
        throw Error(ErrorCode::ZeroSizeImage, "cannot build integral images for an empty image");
    const GradientMaps grads = gradient_maps(image);
    IntegralSet set;
    set.width = image.width;
    set.height = image.height;
    for (int p = 0; p < 3; ++p) {
        set.channels[p * 3 + 0] = IntegralImage(image.planes[p].data(), image.width, image.height);
        set.channels[p * 3 + 1] = IntegralImage(grads.du_abs[p].data(), image.width, image.height);
        set.channels[p * 3 + 2] = IntegralImage(grads.dv_abs[p].data(), image.width, image.height);
    }
    return set;
}

} // namespace posetrack
