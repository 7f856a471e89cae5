#include "posetrack/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include <json.hpp>

#include "posetrack/annotation.hpp"
#include "posetrack/draw.hpp"
#include "posetrack/errors.hpp"
#include "posetrack/image_codec.hpp"

namespace posetrack {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr double kPi = 3.14159265358979323846;

struct FigurePart {
    const char* name;
    int parent; // -1 = root
    Vec2 offset; // relative to the head at rest
    Rgb color;
};

// Saturated, pairwise distinct joint colors keep symmetric limbs apart for
// appearance matching.
const FigurePart kFigure[] = {
    {"head", -1, {0.0, 0.0}, {0.95, 0.30, 0.30}},
    {"neck", 0, {0.0, 22.0}, {0.30, 0.95, 0.30}},
    {"left_shoulder", 1, {-24.0, 28.0}, {0.30, 0.45, 0.95}},
    {"right_shoulder", 1, {24.0, 28.0}, {0.95, 0.90, 0.25}},
    {"left_elbow", 2, {-34.0, 58.0}, {0.95, 0.30, 0.95}},
    {"right_elbow", 3, {34.0, 58.0}, {0.30, 0.95, 0.95}},
    {"left_wrist", 4, {-38.0, 82.0}, {0.95, 0.65, 0.20}},
    {"right_wrist", 5, {38.0, 82.0}, {0.65, 0.30, 0.95}},
    {"left_hip", 1, {-14.0, 84.0}, {0.25, 0.75, 0.45}},
    {"right_hip", 1, {14.0, 84.0}, {0.85, 0.45, 0.20}},
    {"left_knee", 8, {-17.0, 126.0}, {0.45, 0.85, 0.60}},
    {"right_knee", 9, {17.0, 126.0}, {0.60, 0.45, 0.85}},
    {"left_ankle", 10, {-19.0, 166.0}, {0.90, 0.80, 0.50}},
    {"right_ankle", 11, {19.0, 166.0}, {0.50, 0.90, 0.80}},
};
constexpr int kFigureParts = static_cast<int>(sizeof(kFigure) / sizeof(kFigure[0]));

void rotate_subtree(std::vector<Vec2>& pose, const SkeletonTopology& topology, int part,
                    const Vec2& pivot, double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    std::vector<int> stack{part};
    while (!stack.empty()) {
        const int node = stack.back();
        stack.pop_back();
        const Vec2 d = pose[node] - pivot;
        pose[node] = pivot + Vec2{c * d.u - s * d.v, s * d.u + c * d.v};
        for (int i = 0; i < topology.part_count(); ++i)
            if (topology.parent[i] && *topology.parent[i] == node) stack.push_back(i);
    }
}

void quantize_to_8bit(Image& image) {
    for (auto& plane : image.planes)
        for (double& v : plane) v = std::lround(std::clamp(v, 0.0, 1.0) * 255.0) / 255.0;
}

} // namespace

SkeletonTopology figure_topology() {
    std::vector<std::string> parts;
    std::vector<std::optional<int>> parent;
    for (const FigurePart& p : kFigure) {
        parts.emplace_back(p.name);
        parent.push_back(p.parent < 0 ? std::nullopt : std::optional<int>(p.parent));
    }
    return SkeletonTopology::create(parts, parent);
}

std::vector<Vec2> figure_pose(const MotionScript& script, int frame) {
    const SkeletonTopology topology = figure_topology();
    std::vector<Vec2> pose(kFigureParts);
    const Vec2 shift = script.anchor + script.translation * static_cast<double>(frame);
    for (int i = 0; i < kFigureParts; ++i) pose[i] = shift + kFigure[i].offset;

    for (const Oscillation& osc : script.oscillations) {
        const int part = topology.index_of(osc.part);
        if (part < 0)
            throw Error(ErrorCode::InvalidParent,
                        "oscillation names unknown part '" + osc.part + "'");
        if (!topology.parent[part])
            throw Error(ErrorCode::InvalidParent, "cannot oscillate the root part '" + osc.part + "'");
        const double x = 2.0 * kPi * frame / osc.period + osc.phase;
        double wave = std::sin(x);
        if (osc.square) wave = wave >= 0.0 ? 1.0 : -1.0;
        const double angle = osc.amplitude_deg * kPi / 180.0 * wave;
        rotate_subtree(pose, topology, part, pose[*topology.parent[part]], angle);
    }
    return pose;
}

Image figure_background(const MotionScript& script) {
    if (script.width < 1 || script.height < 1)
        throw Error(ErrorCode::ZeroSizeImage, "script image dimensions must be positive");
    Image background = Image::zeros(script.width, script.height);
    std::mt19937 rng(script.seed);
    for (int r = 0; r < script.height; ++r)
        for (int c = 0; c < script.width; ++c) {
            // Dark low-contrast noise keeps the bright figure's appearance
            // term well above the motion priors; raw engine output is mapped
            // directly so pixels do not depend on distribution internals.
            const double n = rng() / 4294967296.0;
            const double value = 0.05 + 0.10 * n;
            for (int p = 0; p < 3; ++p) background.at(p, r, c) = value;
        }
    quantize_to_8bit(background);
    return background;
}

Image render_figure(const MotionScript& script, const Image& background,
                    const std::vector<Vec2>& pose) {
    Image frame = background;
    for (int i = 0; i < kFigureParts; ++i) {
        if (kFigure[i].parent < 0) continue;
        const Rgb base = kFigure[i].color;
        const Rgb dark{base.r * 0.18, base.g * 0.18, base.b * 0.18};
        const Rgb light{base.r * 0.38, base.g * 0.38, base.b * 0.38};
        fill_capsule_striped(frame, pose[kFigure[i].parent], pose[i], 4.0, light, dark, 6.0);
    }
    // Concentric target markers: every band edge puts contrast on a ring
    // boundary, so the ring-mean descriptor reacts sharply to shifts of a
    // pixel or two in any direction.
    for (int i = 0; i < kFigureParts; ++i) {
        const Rgb base = kFigure[i].color;
        const Rgb comp{1.0 - base.r, 1.0 - base.g, 1.0 - base.b};
        fill_disc(frame, pose[i], script.joint_radius, base);
        fill_disc(frame, pose[i], script.joint_radius * 0.66, comp);
        fill_disc(frame, pose[i], script.joint_radius * 0.33, Rgb{1.0, 1.0, 1.0});
    }
    quantize_to_8bit(frame);
    return frame;
}

MotionScript load_motion_script(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoFailure, "cannot open '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::CorruptFile, "'" + path + "': " + e.what());
    }

    MotionScript script;
    try {
        script.id = doc.value("id", script.id);
        script.width = doc.value("width", script.width);
        script.height = doc.value("height", script.height);
        script.frames = doc.value("frames", script.frames);
        script.seed = doc.value("seed", script.seed);
        script.split = doc.value("split", script.split);
        script.joint_radius = doc.value("joint_radius", script.joint_radius);
        if (doc.contains("anchor"))
            script.anchor = {doc["anchor"].at(0).get<double>(), doc["anchor"].at(1).get<double>()};
        if (doc.contains("translation"))
            script.translation = {doc["translation"].at(0).get<double>(),
                                  doc["translation"].at(1).get<double>()};
        if (doc.contains("oscillations")) {
            for (const json& entry : doc["oscillations"]) {
                Oscillation osc;
                osc.part = entry.at("part").get<std::string>();
                osc.amplitude_deg = entry.value("amplitude_deg", osc.amplitude_deg);
                osc.period = entry.value("period", osc.period);
                osc.phase = entry.value("phase", osc.phase);
                osc.square = entry.value("waveform", std::string("sin")) == "square";
                script.oscillations.push_back(std::move(osc));
            }
        }
    } catch (const json::exception& e) {
        throw Error(ErrorCode::CorruptFile, "'" + path + "': " + e.what());
    }
    if (script.frames < 1) throw Error(ErrorCode::CorruptFile, "'" + path + "': frames must be >= 1");
    return script;
}

void save_motion_script(const MotionScript& script, const std::string& path) {
    json doc;
    doc["id"] = script.id;
    doc["width"] = script.width;
    doc["height"] = script.height;
    doc["frames"] = script.frames;
    doc["seed"] = script.seed;
    doc["split"] = script.split;
    doc["joint_radius"] = script.joint_radius;
    doc["anchor"] = {script.anchor.u, script.anchor.v};
    doc["translation"] = {script.translation.u, script.translation.v};
    json oscillations = json::array();
    for (const Oscillation& osc : script.oscillations) {
        oscillations.push_back({{"part", osc.part},
                                {"amplitude_deg", osc.amplitude_deg},
                                {"period", osc.period},
                                {"phase", osc.phase},
                                {"waveform", osc.square ? "square" : "sin"}});
    }
    doc["oscillations"] = std::move(oscillations);

    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::IoFailure, "cannot open '" + path + "' for writing");
    out << doc.dump(2) << "\n";
    if (!out) throw Error(ErrorCode::IoFailure, "short write to '" + path + "'");
}

ClipManifest synth_generate(const MotionScript& script, const std::string& out_dir) {
    const fs::path root(out_dir);
    const fs::path frames_dir = root / "frames";
    std::error_code ec;
    fs::create_directories(frames_dir, ec);
    if (ec) throw Error(ErrorCode::IoFailure, "cannot create '" + frames_dir.string() + "'");

    const Image background = figure_background(script);
    const SkeletonTopology topology = figure_topology();

    Annotation annotation;
    annotation.parts = topology.parts;

    ClipManifest manifest;
    manifest.id = script.id;
    manifest.frames_dir = "frames";
    manifest.annotation = "annotation.json";
    manifest.split = script.split;

    char name[32];
    for (int t = 0; t < script.frames; ++t) {
        const std::vector<Vec2> pose = figure_pose(script, t);
        const Image frame = render_figure(script, background, pose);
        std::snprintf(name, sizeof(name), "frame_%04d.png", t);
        save_image(frame, (frames_dir / name).string());
        manifest.frames.emplace_back(name);

        std::vector<std::optional<Vec2>> row;
        for (const Vec2& joint : pose) row.emplace_back(joint);
        annotation.frames.push_back(std::move(row));
    }

    save_annotation(annotation, (root / "annotation.json").string());
    DatasetManifest dataset;
    dataset.clips.push_back(manifest);
    save_manifest(dataset, (root / "manifest.json").string());
    return manifest;
}

} // namespace posetrack
