#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>

#include "posetrack/annotation.hpp"
#include "posetrack/clip.hpp"
#include "posetrack/config.hpp"
#include "posetrack/draw.hpp"
#include "posetrack/errors.hpp"
#include "posetrack/image_codec.hpp"
#include "posetrack/predictions.hpp"
#include "posetrack/render.hpp"
#include "posetrack/synth.hpp"

using namespace posetrack;

namespace {

namespace fs = std::filesystem;

struct TempDir {
    fs::path path;

    TempDir() {
        static int counter = 0;
        std::random_device rd;
        path = fs::temp_directory_path() /
               ("posetrack_io_" + std::to_string(rd()) + "_" + std::to_string(counter++));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

ErrorCode thrown_code(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::IoFailure;
}

std::string thrown_message(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.what();
    }
    FAIL("expected an Error");
    return "";
}

bool same_pixels(const Image& a, const Image& b) {
    return a.width == b.width && a.height == b.height && a.planes == b.planes;
}

} // namespace

TEST_CASE("annotations round-trip through disk, absent joints included") {
    TempDir dir;
    Annotation annotation;
    annotation.parts = {"head", "neck", "left_wrist"};
    annotation.frames = {
        {Vec2{10.5, 20.25}, Vec2{11.0, 40.0}, std::nullopt},
        {std::nullopt, Vec2{11.125, 41.0}, Vec2{-3.75, 0.0625}},
    };
    const std::string path = dir.file("annotation.json");
    save_annotation(annotation, path);

    const Annotation loaded = load_annotation(path);
    CHECK(loaded.parts == annotation.parts);
    REQUIRE(loaded.frames.size() == 2);
    CHECK(loaded.frames == annotation.frames);
}

TEST_CASE("annotation files with the wrong joint count per frame are rejected") {
    TempDir dir;
    const std::string path = dir.file("bad.json");
    write_text(path, R"({"parts": ["a", "b"], "frames": [[[1, 2]]]})");
    CHECK(thrown_code([&] { load_annotation(path); }) == ErrorCode::AnnotationMismatch);

    write_text(path, "{not json");
    CHECK(thrown_code([&] { load_annotation(path); }) == ErrorCode::CorruptFile);

    write_text(path, R"({"parts": ["a"]})");
    CHECK(thrown_code([&] { load_annotation(path); }) == ErrorCode::CorruptFile);

    CHECK(thrown_code([&] { load_annotation(dir.file("absent.json")); }) == ErrorCode::IoFailure);
}

TEST_CASE("a minimal config keeps every documented default") {
    const RunConfig config = parse_config("[topology]\npart = head\npart = neck head\n", "<string>");
    CHECK(config.parts == std::vector<std::string>{"head", "neck"});
    CHECK(config.rings == 10);
    CHECK(config.ring_stride == 2);
    CHECK(config.clusters == 6);
    CHECK(config.epsilon == 1e-4);
    CHECK(config.lambda1 == 0.7);
    CHECK(config.lambda2 == 0.2);
    CHECK(config.window_radius == 15);
    CHECK(!config.reinit_interval);

    const SkeletonTopology topo = config.topology();
    CHECK(topo.root_index == 0);
    CHECK(*topo.parent[1] == 0);
}

TEST_CASE("configs parse comments, blank lines, and forward parent references") {
    const std::string text =
        "# whole-line comment\n"
        "[topology]\n"
        "part = wrist elbow   ; child first, parent declared later\n"
        "part = elbow\n"
        "\n"
        "[descriptor]\n"
        "rings = 4            # inline comment\n"
        "ring_stride = 3\n"
        "[model]\n"
        "clusters = 2\n"
        "epsilon = 0.5\n"
        "[tracker]\n"
        "lambda1 = 1.25\n"
        "lambda2 = 0\n"
        "window_radius = 9\n"
        "reinit_interval = 30\n";
    const RunConfig config = parse_config(text, "<string>");
    CHECK(config.rings == 4);
    CHECK(config.ring_stride == 3);
    CHECK(config.clusters == 2);
    CHECK(config.epsilon == 0.5);
    CHECK(config.lambda1 == 1.25);
    CHECK(config.lambda2 == 0.0);
    CHECK(config.window_radius == 9);
    REQUIRE(config.reinit_interval);
    CHECK(*config.reinit_interval == 30);

    const SkeletonTopology topo = config.topology();
    CHECK(topo.root_index == 1);
    CHECK(*topo.parent[0] == 1);
}

TEST_CASE("config parse errors carry the source name and line number") {
    const auto message = [](const std::string& text) {
        return thrown_message([&] { parse_config(text, "cfg.ini"); });
    };
    CHECK(message("key = 1\n").find("cfg.ini:1:") != std::string::npos);
    CHECK(message("[topology]\npart = a\n[nope]\n").find("cfg.ini:3:") != std::string::npos);
    CHECK(message("[topology]\nlimb = a\n").find("unknown topology key") != std::string::npos);
    CHECK(message("[descriptor]\nrungs = 3\n").find("unknown descriptor key") != std::string::npos);
    CHECK(message("[model]\nk = 3\n").find("unknown model key") != std::string::npos);
    CHECK(message("[tracker]\nspeed = 3\n").find("unknown tracker key") != std::string::npos);
    CHECK(message("[tracker]\nlambda1\n").find("expected 'key = value'") != std::string::npos);
    CHECK(message("[tracker]\nlambda1 = fast\n").find("needs a number") != std::string::npos);
    CHECK(message("[descriptor]\nrings = 2.5\n").find("needs an integer") != std::string::npos);
    CHECK(message("[topology\n").find("unterminated") != std::string::npos);
    CHECK(message("[topology]\npart = a b c\n").find("optional parent") != std::string::npos);
}

TEST_CASE("config validation enforces the documented ranges") {
    const auto code = [](const std::string& text) {
        return thrown_code([&] { parse_config(text, "<string>"); });
    };
    const std::string topo = "[topology]\npart = head\n";
    CHECK(code("") == ErrorCode::ConfigParse);
    CHECK(code(topo + "[descriptor]\nrings = 0\n") == ErrorCode::ConfigParse);
    CHECK(code(topo + "[descriptor]\nring_stride = 0\n") == ErrorCode::ConfigParse);
    CHECK(code(topo + "[model]\nclusters = 0\n") == ErrorCode::ConfigParse);
    CHECK(code(topo + "[tracker]\nwindow_radius = -1\n") == ErrorCode::ConfigParse);
    CHECK(code(topo + "[tracker]\nreinit_interval = 0\n") == ErrorCode::ConfigParse);

    const RunConfig orphan = parse_config("[topology]\npart = wrist arm\n", "<string>");
    const std::string text = thrown_message([&] { orphan.topology(); });
    CHECK(text.find("unknown parent 'arm'") != std::string::npos);
}

TEST_CASE("manifests round-trip and default the split to test") {
    TempDir dir;
    DatasetManifest manifest;
    manifest.clips.push_back({"walk", "walk/frames", {"a.png", "b.png"}, "walk/annotation.json", "train"});
    manifest.clips.push_back({"run", "run/frames", {}, "run/annotation.json", "test"});
    const std::string path = dir.file("manifest.json");
    save_manifest(manifest, path);

    const DatasetManifest loaded = load_manifest(path);
    REQUIRE(loaded.clips.size() == 2);
    CHECK(loaded.clips[0].id == "walk");
    CHECK(loaded.clips[0].frames == manifest.clips[0].frames);
    CHECK(loaded.clips[1].frames.empty());
    CHECK(loaded.clips[1].split == "test");

    write_text(path, R"({"clips": [{"id": "x", "frames_dir": "f", "annotation": "a.json"}]})");
    CHECK(load_manifest(path).clips[0].split == "test");

    write_text(path, "[]");
    CHECK(thrown_code([&] { load_manifest(path); }) == ErrorCode::CorruptFile);
}

TEST_CASE("frame discovery keeps only image files, sorted by name") {
    TempDir dir;
    const Image dot = Image::zeros(2, 2);
    save_image(dot, dir.file("frame_0002.png"));
    save_image(dot, dir.file("frame_0000.jpg"));
    save_image(dot, dir.file("frame_0001.jpeg"));
    save_image(dot, dir.file("FRAME_0003.PNG"));
    write_text(dir.file("notes.txt"), "not a frame");
    fs::create_directories(dir.path / "sub.png");

    const std::vector<std::string> names = discover_frames(dir.path.string());
    const std::vector<std::string> expected{"FRAME_0003.PNG", "frame_0000.jpg", "frame_0001.jpeg",
                                            "frame_0002.png"};
    CHECK(names == expected);
}

TEST_CASE("generated clips load back with exact ground truth") {
    TempDir dir;
    MotionScript script;
    script.id = "unit";
    script.width = 240;
    script.height = 220;
    script.frames = 3;
    script.translation = {1.0, 0.0};
    script.anchor = {120.0, 30.0};
    const ClipManifest manifest = synth_generate(script, dir.path.string());

    CHECK(manifest.frames.size() == 3);
    const Clip clip = load_clip(manifest, dir.path.string(), figure_topology().parts);
    CHECK(clip.frame_paths.size() == 3);
    REQUIRE(clip.annotation.frames.size() == 3);
    for (int t = 0; t < 3; ++t) {
        const std::vector<Vec2> pose = figure_pose(script, t);
        for (size_t i = 0; i < pose.size(); ++i) CHECK(*clip.annotation.frames[t][i] == pose[i]);
    }

    const FrameSource source = clip.source();
    CHECK(source.count == 3);
    const Image first = source.get(0);
    CHECK(first.width == 240);
    CHECK(first.height == 220);

    const TrainingClip training = clip.training();
    CHECK(training.id == "unit");
    CHECK(training.frames.size() == 3);

    // Discovery finds the same frames the manifest lists.
    ClipManifest discover = manifest;
    discover.frames.clear();
    CHECK(load_clip(discover, dir.path.string()).frame_paths == clip.frame_paths);
}

TEST_CASE("clip loading reports missing frames and annotation mismatches") {
    TempDir dir;
    ClipManifest manifest{"ghost", "frames", {}, "annotation.json", "test"};
    CHECK(thrown_code([&] { load_clip(manifest, dir.path.string()); }) == ErrorCode::MissingFrame);

    fs::create_directories(dir.path / "frames");
    CHECK(thrown_code([&] { load_clip(manifest, dir.path.string()); }) == ErrorCode::MissingFrame);

    manifest.frames = {"frame_0000.png"};
    const std::string missing =
        thrown_message([&] { load_clip(manifest, dir.path.string()); });
    CHECK(missing.find("frame_0000.png") != std::string::npos);

    save_image(Image::zeros(4, 4), dir.file("frames/frame_0000.png"));
    Annotation annotation;
    annotation.parts = {"head"};
    annotation.frames = {{Vec2{1, 1}}};
    save_annotation(annotation, dir.file("annotation.json"));

    CHECK(thrown_code([&] { load_clip(manifest, dir.path.string(), {"head", "neck"}); }) ==
          ErrorCode::AnnotationMismatch);

    annotation.frames.clear();
    save_annotation(annotation, dir.file("annotation.json"));
    CHECK(thrown_code([&] { load_clip(manifest, dir.path.string()); }) ==
          ErrorCode::AnnotationMismatch);

    // Rows past the last frame stay available for reinitialization.
    annotation.frames = {{Vec2{1, 1}}, {Vec2{2, 2}}};
    save_annotation(annotation, dir.file("annotation.json"));
    CHECK(load_clip(manifest, dir.path.string()).annotation.frames.size() == 2);
}

TEST_CASE("quantized images survive a PNG round-trip bit for bit") {
    TempDir dir;
    Image image = Image::zeros(9, 7);
    std::mt19937 rng(3);
    for (auto& plane : image.planes)
        for (double& v : plane) v = static_cast<double>(rng() % 256) / 255.0;

    const std::string path = dir.file("image.png");
    save_image(image, path);
    CHECK(same_pixels(load_image(path), image));
}

TEST_CASE("grayscale files replicate their plane on decode") {
    TempDir dir;
    cv::Mat gray(5, 6, CV_8UC1);
    for (int r = 0; r < gray.rows; ++r)
        for (int c = 0; c < gray.cols; ++c) gray.at<unsigned char>(r, c) = static_cast<unsigned char>(40 * r + c);
    const std::string path = dir.file("gray.png");
    REQUIRE(cv::imwrite(path, gray));

    const Image image = load_image(path);
    CHECK(image.width == 6);
    CHECK(image.height == 5);
    for (int r = 0; r < 5; ++r)
        for (int c = 0; c < 6; ++c) {
            const double expected = (40 * r + c) / 255.0;
            CHECK(image.at(0, r, c) == expected);
            CHECK(image.at(1, r, c) == expected);
            CHECK(image.at(2, r, c) == expected);
        }
}

TEST_CASE("unreadable image files raise a decode error") {
    TempDir dir;
    const std::string path = dir.file("broken.png");
    write_text(path, "this is not a png");
    CHECK(thrown_code([&] { load_image(path); }) == ErrorCode::DecodeError);
    CHECK(thrown_code([&] { load_image(dir.file("absent.png")); }) == ErrorCode::DecodeError);
}

TEST_CASE("discs cover exactly the pixels within their radius") {
    Image image = Image::zeros(5, 5);
    fill_disc(image, {2.0, 2.0}, 1.0, {1.0, 0.5, 0.25});
    int covered = 0;
    for (int r = 0; r < 5; ++r)
        for (int c = 0; c < 5; ++c) {
            const bool inside = (r - 2) * (r - 2) + (c - 2) * (c - 2) <= 1;
            if (image.at(0, r, c) != 0.0) ++covered;
            CHECK(image.at(0, r, c) == (inside ? 1.0 : 0.0));
            CHECK(image.at(1, r, c) == (inside ? 0.5 : 0.0));
        }
    CHECK(covered == 5);
}

TEST_CASE("striped capsules alternate bands along the axis") {
    // The power-of-two limb length keeps every axis projection exact, so
    // band membership is unambiguous at the stripe boundaries.
    Image image = Image::zeros(12, 5);
    const Rgb red{1.0, 0.0, 0.0};
    const Rgb blue{0.0, 0.0, 1.0};
    fill_capsule_striped(image, {0.0, 2.0}, {8.0, 2.0}, 0.6, red, blue, 2.0);

    for (int c = 0; c <= 8; ++c) {
        const bool second = (c / 2) % 2 != 0;
        CHECK(image.at(0, 2, c) == (second ? 0.0 : 1.0));
        CHECK(image.at(2, 2, c) == (second ? 1.0 : 0.0));
    }
    // Nothing lands beyond the caps or off the axis at this radius.
    CHECK(image.at(0, 2, 9) == 0.0);
    CHECK(image.at(0, 1, 3) == 0.0);
    CHECK(image.at(2, 3, 3) == 0.0);

    // A plain capsule is a striped one with a single color.
    Image plain = Image::zeros(12, 5);
    fill_capsule(plain, {0.0, 2.0}, {8.0, 2.0}, 0.6, red);
    for (int c = 0; c <= 8; ++c) CHECK(plain.at(0, 2, c) == 1.0);
}

TEST_CASE("motionless scripts render identical frames") {
    MotionScript script;
    script.width = 200;
    script.height = 220;
    script.frames = 6;
    script.anchor = {100.0, 25.0};
    const Image background = figure_background(script);
    const Image first = render_figure(script, background, figure_pose(script, 0));
    const Image later = render_figure(script, background, figure_pose(script, 5));
    CHECK(same_pixels(first, later));
}

TEST_CASE("rigid translation moves every joint by the scripted step") {
    MotionScript script;
    script.translation = {2.0, 0.0};
    const std::vector<Vec2> base = figure_pose(script, 0);
    for (int t : {1, 4, 9}) {
        const std::vector<Vec2> pose = figure_pose(script, t);
        for (size_t i = 0; i < pose.size(); ++i) {
            CHECK(pose[i].u - base[i].u == 2.0 * t);
            CHECK(pose[i].v - base[i].v == 0.0);
        }
    }
}

TEST_CASE("square-wave oscillations visit exactly two joint offsets") {
    MotionScript script;
    script.frames = 20;
    script.oscillations.push_back({"left_elbow", 10.0, 15.0, 0.0, true});
    const SkeletonTopology topo = figure_topology();
    const int elbow = topo.index_of("left_elbow");
    const int shoulder = *topo.parent[elbow];

    std::set<std::pair<double, double>> offsets;
    for (int t = 0; t < 20; ++t) {
        const std::vector<Vec2> pose = figure_pose(script, t);
        const Vec2 d = pose[elbow] - pose[shoulder];
        offsets.insert({d.u, d.v});
    }
    CHECK(offsets.size() == 2);
}

TEST_CASE("backgrounds depend only on the seed") {
    MotionScript script;
    script.width = 64;
    script.height = 48;
    const Image a = figure_background(script);
    const Image b = figure_background(script);
    CHECK(same_pixels(a, b));

    script.seed = 99;
    CHECK(!same_pixels(figure_background(script), a));
}

TEST_CASE("rendered frames hold only 8-bit representable values") {
    MotionScript script;
    script.width = 160;
    script.height = 200;
    const Image background = figure_background(script);
    const Image frame = render_figure(script, background, figure_pose(script, 0));
    for (const auto& plane : frame.planes)
        for (double v : plane) {
            const double scaled = v * 255.0;
            CHECK(std::abs(scaled - std::lround(scaled)) < 1e-9);
        }
}

TEST_CASE("written frames decode to the renderer's exact output") {
    TempDir dir;
    MotionScript script;
    script.width = 200;
    script.height = 220;
    script.frames = 2;
    script.anchor = {100.0, 25.0};
    synth_generate(script, dir.path.string());

    const Image background = figure_background(script);
    const Image expected = render_figure(script, background, figure_pose(script, 1));
    const Image decoded = load_image(dir.file("frames/frame_0001.png"));
    CHECK(same_pixels(decoded, expected));
}

TEST_CASE("scripts cannot oscillate the root or an unknown part") {
    MotionScript script;
    script.oscillations.push_back({"head", 10.0, 15.0, 0.0, false});
    CHECK(thrown_code([&] { figure_pose(script, 0); }) == ErrorCode::InvalidParent);

    script.oscillations[0].part = "tail";
    CHECK(thrown_code([&] { figure_pose(script, 0); }) == ErrorCode::InvalidParent);
}

TEST_CASE("motion scripts round-trip through JSON") {
    TempDir dir;
    MotionScript script;
    script.id = "spin";
    script.width = 128;
    script.height = 96;
    script.frames = 12;
    script.seed = 42;
    script.anchor = {60.0, 20.0};
    script.translation = {1.5, -0.25};
    script.split = "train";
    script.joint_radius = 5.5;
    script.oscillations.push_back({"left_elbow", 12.0, 10.0, 0.5, true});
    script.oscillations.push_back({"right_elbow", 12.0, 10.0, 3.5, false});

    const std::string path = dir.file("script.json");
    save_motion_script(script, path);
    const MotionScript loaded = load_motion_script(path);
    CHECK(loaded.id == script.id);
    CHECK(loaded.width == script.width);
    CHECK(loaded.height == script.height);
    CHECK(loaded.frames == script.frames);
    CHECK(loaded.seed == script.seed);
    CHECK(loaded.anchor == script.anchor);
    CHECK(loaded.translation == script.translation);
    CHECK(loaded.split == script.split);
    CHECK(loaded.joint_radius == script.joint_radius);
    REQUIRE(loaded.oscillations.size() == 2);
    CHECK(loaded.oscillations[0].square);
    CHECK(!loaded.oscillations[1].square);
    CHECK(loaded.oscillations[1].phase == 3.5);

    write_text(path, R"({"frames": 0})");
    CHECK(thrown_code([&] { load_motion_script(path); }) == ErrorCode::CorruptFile);
}

TEST_CASE("overlays draw present joints and leave absent ones alone") {
    const SkeletonTopology topo =
        SkeletonTopology::create({"a", "b", "c"}, {std::nullopt, 0, 1});
    Image frame = Image::zeros(40, 30);
    for (auto& plane : frame.planes)
        for (double& v : plane) v = 0.5;

    Pose none;
    none.positions = {std::nullopt, std::nullopt, std::nullopt};
    CHECK(same_pixels(render_overlay(frame, none, topo), frame));

    Pose pose;
    pose.positions = {Vec2{10, 10}, Vec2{20, 18}, std::nullopt};
    const Image a = render_overlay(frame, pose, topo);
    const Image b = render_overlay(frame, pose, topo);
    CHECK(same_pixels(a, b));
    CHECK(!same_pixels(a, frame));

    Pose short_pose;
    short_pose.positions = {Vec2{10, 10}};
    CHECK(thrown_code([&] { render_overlay(frame, short_pose, topo); }) ==
          ErrorCode::LengthMismatch);
}

TEST_CASE("prediction files round-trip") {
    TempDir dir;
    PredictionFile predictions;
    predictions.clip = "walk";
    predictions.parts = {"head", "neck"};
    Pose p0;
    p0.positions = {Vec2{3.5, 4.25}, std::nullopt};
    p0.frame_index = 0;
    Pose p1;
    p1.positions = {Vec2{4.5, 4.25}, Vec2{4.0, 16.0}};
    p1.frame_index = 1;
    predictions.poses = {p0, p1};

    const std::string path = dir.file("pred.json");
    save_predictions(predictions, path);
    const PredictionFile loaded = load_predictions(path);
    CHECK(loaded.clip == "walk");
    CHECK(loaded.parts == predictions.parts);
    REQUIRE(loaded.poses.size() == 2);
    CHECK(loaded.poses[0].positions == p0.positions);
    CHECK(loaded.poses[1].positions == p1.positions);
    CHECK(loaded.poses[1].frame_index == 1);

    write_text(path, R"({"clip": "x", "parts": ["a"], "poses": [[[1, 2], [3, 4]]]})");
    CHECK(thrown_code([&] { load_predictions(path); }) == ErrorCode::CorruptFile);
}
