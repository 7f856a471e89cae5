#include "posetrack/clip.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "posetrack/errors.hpp"
#include "posetrack/image_codec.hpp"

namespace posetrack {

namespace fs = std::filesystem;
using nlohmann::json;

DatasetManifest load_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoFailure, "cannot open '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::CorruptFile, "'" + path + "': " + e.what());
    }

    DatasetManifest manifest;
    try {
        for (const json& entry : doc.at("clips")) {
            ClipManifest clip;
            clip.id = entry.at("id").get<std::string>();
            clip.frames_dir = entry.at("frames_dir").get<std::string>();
            clip.annotation = entry.at("annotation").get<std::string>();
            clip.split = entry.value("split", std::string("test"));
            if (entry.contains("frames"))
                clip.frames = entry.at("frames").get<std::vector<std::string>>();
            manifest.clips.push_back(std::move(clip));
        }
    } catch (const json::exception& e) {
        throw Error(ErrorCode::CorruptFile, "'" + path + "': " + e.what());
    }
    return manifest;
}

void save_manifest(const DatasetManifest& manifest, const std::string& path) {
    json clips = json::array();
    for (const ClipManifest& clip : manifest.clips) {
        json entry;
        entry["id"] = clip.id;
        entry["frames_dir"] = clip.frames_dir;
        entry["annotation"] = clip.annotation;
        entry["split"] = clip.split;
        if (!clip.frames.empty()) entry["frames"] = clip.frames;
        clips.push_back(std::move(entry));
    }
    json doc;
    doc["clips"] = std::move(clips);

    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::IoFailure, "cannot open '" + path + "' for writing");
    out << doc.dump(2) << "\n";
    if (!out) throw Error(ErrorCode::IoFailure, "short write to '" + path + "'");
}

std::vector<std::string> discover_frames(const std::string& dir) {
    std::error_code ec;
    std::vector<std::string> names;
    for (const auto& entry : fs::directory_iterator(dir, ec)) {
        if (!entry.is_regular_file()) continue;
        std::string ext = entry.path().extension().string();
        std::transform(ext.begin(), ext.end(), ext.begin(),
                       [](unsigned char c) { return std::tolower(c); });
        if (ext == ".png" || ext == ".jpg" || ext == ".jpeg")
            names.push_back(entry.path().filename().string());
    }
    if (ec) throw Error(ErrorCode::IoFailure, "cannot list '" + dir + "': " + ec.message());
    std::sort(names.begin(), names.end());
    return names;
}

FrameSource Clip::source() const {
    FrameSource src;
    src.count = static_cast<int>(frame_paths.size());
    auto paths = frame_paths;
    src.get = [paths](int index) { return load_image(paths.at(static_cast<size_t>(index))); };
    return src;
}

TrainingClip Clip::training() const {
    TrainingClip clip;
    clip.id = id;
    clip.frames = annotation.frames;
    return clip;
}

Clip load_clip(const ClipManifest& manifest, const std::string& base_dir,
               const std::vector<std::string>& expected_parts) {
    auto resolve = [&](const std::string& path) {
        fs::path p(path);
        if (p.is_absolute() || base_dir.empty()) return p;
        return fs::path(base_dir) / p;
    };

    const fs::path frames_dir = resolve(manifest.frames_dir);
    std::vector<std::string> names = manifest.frames;
    if (names.empty()) {
        if (!fs::is_directory(frames_dir))
            throw Error(ErrorCode::MissingFrame, "frame directory '" + frames_dir.string() +
                                                     "' does not exist for clip '" + manifest.id + "'");
        names = discover_frames(frames_dir.string());
    }
    if (names.empty())
        throw Error(ErrorCode::MissingFrame,
                    "clip '" + manifest.id + "' has no frames under '" + frames_dir.string() + "'");

    Clip clip;
    clip.id = manifest.id;
    for (const std::string& name : names) {
        fs::path path = frames_dir / name;
        if (!fs::is_regular_file(path))
            throw Error(ErrorCode::MissingFrame, "'" + path.string() + "' listed for clip '" +
                                                     manifest.id + "' is missing");
        clip.frame_paths.push_back(path.string());
    }

    clip.annotation = load_annotation(resolve(manifest.annotation).string());
    if (!expected_parts.empty() && clip.annotation.parts != expected_parts) {
        std::string got;
        for (const std::string& p : clip.annotation.parts) got += (got.empty() ? "" : ", ") + p;
        throw Error(ErrorCode::AnnotationMismatch, "clip '" + manifest.id +
                                                       "' annotates parts [" + got +
                                                       "] which do not match the configured topology");
    }
    if (clip.annotation.frames.size() < clip.frame_paths.size())
        throw Error(ErrorCode::AnnotationMismatch,
                    "clip '" + manifest.id + "' annotates " +
                        std::to_string(clip.annotation.frames.size()) + " frames but has " +
                        std::to_string(clip.frame_paths.size()) + " images");
    return clip;
}

} // namespace posetrack
