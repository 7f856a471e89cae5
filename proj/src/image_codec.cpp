#include "posetrack/image_codec.hpp"

#include <algorithm>
#include <cmath>

#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>

#include "posetrack/errors.hpp"

namespace posetrack {

Image load_image(const std::string& path) {
    cv::Mat raw = cv::imread(path, cv::IMREAD_UNCHANGED);
    if (raw.empty()) throw Error(ErrorCode::DecodeError, "cannot decode '" + path + "'");
    if (raw.depth() != CV_8U)
        raw.convertTo(raw, CV_8U, raw.depth() == CV_16U ? 255.0 / 65535.0 : 1.0);

    Image image = Image::zeros(raw.cols, raw.rows);
    const int channels = raw.channels();
    for (int r = 0; r < raw.rows; ++r) {
        const unsigned char* row = raw.ptr<unsigned char>(r);
        for (int c = 0; c < raw.cols; ++c) {
            const unsigned char* px = row + c * channels;
            switch (channels) {
            case 1:
                image.at(0, r, c) = image.at(1, r, c) = image.at(2, r, c) = px[0] / 255.0;
                break;
            case 3:
            case 4:
                // OpenCV decodes BGR(A); planes are stored R, G, B.
                image.at(0, r, c) = px[2] / 255.0;
                image.at(1, r, c) = px[1] / 255.0;
                image.at(2, r, c) = px[0] / 255.0;
                break;
            default:
                throw Error(ErrorCode::DecodeError, "'" + path + "' has unsupported channel count");
            }
        }
    }
    return image;
}

void save_image(const Image& image, const std::string& path) {
    cv::Mat bgr(image.height, image.width, CV_8UC3);
    for (int r = 0; r < image.height; ++r) {
        cv::Vec3b* row = bgr.ptr<cv::Vec3b>(r);
        for (int c = 0; c < image.width; ++c) {
            auto quantize = [&](int plane) {
                double v = std::clamp(image.at(plane, r, c), 0.0, 1.0);
                return static_cast<unsigned char>(std::lround(v * 255.0));
            };
            row[c] = cv::Vec3b(quantize(2), quantize(1), quantize(0));
        }
    }
    if (!cv::imwrite(path, bgr)) throw Error(ErrorCode::IoFailure, "cannot write '" + path + "'");
}

} // namespace posetrack
