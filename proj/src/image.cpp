#include "posetrack/image.hpp"

#include <cmath>

namespace posetrack {

Image Image::zeros(int width, int height) {
    Image img;
    img.width = width;
    img.height = height;
    for (auto& p : img.planes) p.assign(static_cast<size_t>(width) * height, 0.0);
    return img;
}

GradientMaps gradient_maps(const Image& image) {
    GradientMaps maps;
    maps.width = image.width;
    maps.height = image.height;
    const int w = image.width;
    const int h = image.height;
    for (int p = 0; p < 3; ++p) {
        const auto& src = image.planes[p];
        auto& du = maps.du_abs[p];
        auto& dv = maps.dv_abs[p];
        du.resize(src.size());
        dv.resize(src.size());
        for (int r = 0; r < h; ++r) {
            const size_t row = static_cast<size_t>(r) * w;
            for (int c = 0; c < w; ++c) {
                const int cl = c > 0 ? c - 1 : 0;
                const int cr = c < w - 1 ? c + 1 : w - 1;
                const int ru = r > 0 ? r - 1 : 0;
                const int rd = r < h - 1 ? r + 1 : h - 1;
                du[row + c] = std::abs(src[row + cr] - src[row + cl]);
                dv[row + c] = std::abs(src[static_cast<size_t>(rd) * w + c] - src[static_cast<size_t>(ru) * w + c]);
            }
        }
    }
    return maps;
}

} // namespace posetrack
