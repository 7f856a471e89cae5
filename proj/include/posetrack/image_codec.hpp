#pragma once

#include <string>

#include "posetrack/image.hpp"

namespace posetrack {

// Decodes a PNG/JPEG file into planar doubles in [0, 1].  Grayscale input is
// replicated across all three planes.  Throws DecodeError naming the file.
Image load_image(const std::string& path);

// Encodes to 8-bit by rounding value * 255 after clamping to [0, 1].  The
// container is chosen from the extension.  Throws IoFailure on write errors.
void save_image(const Image& image, const std::string& path);

} // namespace posetrack
