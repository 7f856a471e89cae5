#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "posetrack/image.hpp"

namespace posetrack {

/// Prefix-sum grid of one plane: (height+1) x (width+1) with a zero first
/// row and column, so any rectangle sum costs four lookups.
class IntegralImage {
public:
    IntegralImage() = default;
    IntegralImage(const double* plane, int width, int height);

    int width() const { return width_; }
    int height() const { return height_; }

    /// Cumulative sum over pixel rows [0, row) and cols [0, col).
    double prefix(int row, int col) const { return grid_[static_cast<size_t>(row) * (width_ + 1) + col]; }

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<double> grid_;
};

/// Inclusive pixel rectangle.
struct PixelRect {
    int row0 = 0, col0 = 0, row1 = -1, col1 = -1;
};

struct RectSum {
    double sum = 0.0;
    std::int64_t area = 0;
};

/// Sum over the rectangle clipped to image bounds. A rectangle that clips
/// away entirely yields {0, 0}.
RectSum rect_sum(const IntegralImage& integral, const PixelRect& rect);

/// The nine per-frame integral images the descriptor reads: for each color
/// plane, one over intensity, one over |horizontal gradient| and one over
/// |vertical gradient|.
struct IntegralSet {
    static constexpr int kChannelsPerPlane = 3; // intensity, |du|, |dv|
    int width = 0;
    int height = 0;
    std::array<IntegralImage, 9> channels;

    const IntegralImage& channel(int plane, int kind) const {
        return channels[static_cast<size_t>(plane) * kChannelsPerPlane + kind];
    }
};

IntegralSet build_integral(const Image& image);

} // namespace posetrack
