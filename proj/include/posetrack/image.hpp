#pragma once

#include <array>
#include <vector>

namespace posetrack {

/// Three-plane RGB image, row-major doubles in [0, 1]. Grayscale inputs
/// replicate their single plane on decode.
struct Image {
    int width = 0;
    int height = 0;
    std::array<std::vector<double>, 3> planes;

    double at(int plane, int row, int col) const { return planes[plane][static_cast<size_t>(row) * width + col]; }
    double& at(int plane, int row, int col) { return planes[plane][static_cast<size_t>(row) * width + col]; }

    static Image zeros(int width, int height);
};

/// Per-plane gradient magnitude maps, same dimensions as the source image.
struct GradientMaps {
    int width = 0;
    int height = 0;
    std::array<std::vector<double>, 3> du_abs; // |horizontal gradient|
    std::array<std::vector<double>, 3> dv_abs; // |vertical gradient|
};

/// Central differences [-1, 0, 1] per axis with replicated borders,
/// absolute value taken.
GradientMaps gradient_maps(const Image& image);

} // namespace posetrack
