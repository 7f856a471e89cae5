#include "posetrack/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "posetrack/clip.hpp"
#include "posetrack/config.hpp"
#include "posetrack/errors.hpp"
#include "posetrack/image_codec.hpp"
#include "posetrack/metrics.hpp"
#include "posetrack/models.hpp"
#include "posetrack/predictions.hpp"
#include "posetrack/render.hpp"
#include "posetrack/synth.hpp"
#include "posetrack/tracker.hpp"

namespace posetrack {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string manifest_dir(const std::string& manifest_path) {
    return fs::path(manifest_path).parent_path().string();
}

const ClipManifest& find_clip(const DatasetManifest& manifest, const std::string& id,
                              const std::string& manifest_path) {
    for (const ClipManifest& clip : manifest.clips)
        if (clip.id == id) return clip;
    throw Error(ErrorCode::CorruptFile, "clip '" + id + "' not found in '" + manifest_path + "'");
}

std::vector<Pose> annotation_poses(const Annotation& annotation) {
    std::vector<Pose> poses;
    for (size_t t = 0; t < annotation.frames.size(); ++t) {
        Pose pose;
        pose.frame_index = static_cast<int>(t);
        pose.positions = annotation.frames[t];
        poses.push_back(std::move(pose));
    }
    return poses;
}

void write_or_print(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw Error(ErrorCode::IoFailure, "cannot open '" + out_path + "' for writing");
    out << text;
    if (!out) throw Error(ErrorCode::IoFailure, "short write to '" + out_path + "'");
}

int run_train(const std::string& config_path, const std::string& manifest_path,
              const std::string& out_path, std::optional<int> clusters,
              std::optional<double> epsilon) {
    RunConfig config = load_config(config_path);
    if (clusters) config.clusters = *clusters;
    if (epsilon) config.epsilon = *epsilon;
    const SkeletonTopology topology = config.topology();

    const DatasetManifest manifest = load_manifest(manifest_path);
    const std::string base = manifest_dir(manifest_path);
    std::vector<TrainingClip> clips;
    for (const ClipManifest& entry : manifest.clips) {
        if (entry.split != "train") continue;
        fs::path annotation_path(entry.annotation);
        if (!annotation_path.is_absolute() && !base.empty())
            annotation_path = fs::path(base) / annotation_path;
        Annotation annotation = load_annotation(annotation_path.string());
        if (annotation.parts != topology.parts)
            throw Error(ErrorCode::AnnotationMismatch,
                        "clip '" + entry.id + "' does not annotate the configured topology");
        TrainingClip clip;
        clip.id = entry.id;
        clip.frames = std::move(annotation.frames);
        clips.push_back(std::move(clip));
    }
    if (clips.empty())
        throw Error(ErrorCode::NoSamples, "no clips with split 'train' in '" + manifest_path + "'");

    PoseModel model = fit_model(clips, topology, config.geometry(), config.clusters, config.epsilon);
    model.lambda1 = config.lambda1;
    model.lambda2 = config.lambda2;
    model.window_radius = config.window_radius;
    save_model(model, out_path);
    std::cout << "trained on " << clips.size() << " clip(s), model written to " << out_path << "\n";
    return 0;
}

int run_track(const std::string& model_path, const std::string& manifest_path,
              const std::string& clip_id, const std::string& out_path,
              std::optional<double> lambda1, std::optional<double> lambda2,
              std::optional<int> window_radius, std::optional<int> reinit_interval) {
    const PoseModel model = load_model(model_path);
    const DatasetManifest manifest = load_manifest(manifest_path);
    const ClipManifest& entry = find_clip(manifest, clip_id, manifest_path);
    const Clip clip = load_clip(entry, manifest_dir(manifest_path), model.topology.parts);

    TrackerConfig config = TrackerConfig::from_model(model);
    if (lambda1) config.lambda1 = *lambda1;
    if (lambda2) config.lambda2 = *lambda2;
    if (window_radius) config.window_radius = *window_radius;
    if (reinit_interval) config.reinit_interval = *reinit_interval;

    const std::vector<Pose> ground_truth = annotation_poses(clip.annotation);
    Pose first_pose = ground_truth.at(0);
    first_pose.frame_index = 0;

    const std::vector<Pose> poses =
        track_video(clip.source(), first_pose, model, config,
                    config.reinit_interval ? &ground_truth : nullptr);

    PredictionFile predictions;
    predictions.clip = clip.id;
    predictions.parts = model.topology.parts;
    predictions.poses = poses;
    save_predictions(predictions, out_path);
    std::cout << "tracked " << poses.size() << " frame(s) of clip '" << clip.id << "' to " << out_path
              << "\n";
    return 0;
}

int run_eval(const std::string& predictions_path, const std::string& manifest_path,
             const std::string& clip_id, const std::string& annotation_path,
             const std::string& config_path, std::vector<double> thresholds, bool with_pcp,
             double ratio, const std::string& format, const std::string& out_path,
             const std::string& pcp_out_path) {
    const PredictionFile predictions = load_predictions(predictions_path);

    Annotation annotation;
    if (!annotation_path.empty()) {
        annotation = load_annotation(annotation_path);
    } else {
        if (manifest_path.empty())
            throw Error(ErrorCode::IoFailure, "eval needs --annotation or --manifest with --clip");
        const DatasetManifest manifest = load_manifest(manifest_path);
        const std::string id = clip_id.empty() ? predictions.clip : clip_id;
        const ClipManifest& entry = find_clip(manifest, id, manifest_path);
        fs::path path(entry.annotation);
        const std::string base = manifest_dir(manifest_path);
        if (!path.is_absolute() && !base.empty()) path = fs::path(base) / path;
        annotation = load_annotation(path.string());
    }
    if (annotation.parts != predictions.parts)
        throw Error(ErrorCode::AnnotationMismatch,
                    "'" + predictions_path + "' and the ground truth list different parts");
    if (annotation.frames.size() < predictions.poses.size())
        throw Error(ErrorCode::LengthMismatch,
                    "ground truth covers " + std::to_string(annotation.frames.size()) +
                        " frames but predictions cover " + std::to_string(predictions.poses.size()));
    std::vector<Pose> ground_truth = annotation_poses(annotation);
    ground_truth.resize(predictions.poses.size());

    std::sort(thresholds.begin(), thresholds.end());
    const AccuracyReport report =
        localization_accuracy(predictions.poses, ground_truth, thresholds, predictions.parts);
    std::string text;
    if (format == "csv")
        text = accuracy_report_csv(report);
    else if (format == "json")
        text = accuracy_report_json(report);
    else
        text = accuracy_report_text(report);
    write_or_print(text, out_path);

    if (with_pcp) {
        if (config_path.empty())
            throw Error(ErrorCode::IoFailure, "--pcp needs --config for the limb structure");
        const SkeletonTopology topology = load_config(config_path).topology();
        if (topology.parts != predictions.parts)
            throw Error(ErrorCode::AnnotationMismatch,
                        "'" + config_path + "' topology does not match the prediction parts");
        const PcpReport limbs =
            pcp(predictions.poses, ground_truth, limbs_from_topology(topology), ratio);
        std::string pcp_text;
        if (format == "csv")
            pcp_text = pcp_report_csv(limbs);
        else if (format == "json")
            pcp_text = pcp_report_json(limbs);
        else
            pcp_text = pcp_report_text(limbs);
        write_or_print(pcp_text, pcp_out_path.empty() ? out_path.empty() ? "" : out_path + ".pcp"
                                                      : pcp_out_path);
    }
    return 0;
}

int run_render(const std::string& predictions_path, const std::string& manifest_path,
               const std::string& clip_id, const std::string& config_path,
               const std::string& out_dir) {
    const PredictionFile predictions = load_predictions(predictions_path);
    const SkeletonTopology topology = load_config(config_path).topology();
    if (topology.parts != predictions.parts)
        throw Error(ErrorCode::AnnotationMismatch,
                    "'" + config_path + "' topology does not match the prediction parts");

    const DatasetManifest manifest = load_manifest(manifest_path);
    const std::string id = clip_id.empty() ? predictions.clip : clip_id;
    const Clip clip = load_clip(find_clip(manifest, id, manifest_path), manifest_dir(manifest_path),
                                predictions.parts);
    if (clip.frame_paths.size() < predictions.poses.size())
        throw Error(ErrorCode::LengthMismatch,
                    "clip '" + id + "' has fewer frames than the prediction file");

    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw Error(ErrorCode::IoFailure, "cannot create '" + out_dir + "'");

    char name[32];
    const FrameSource source = clip.source();
    for (size_t t = 0; t < predictions.poses.size(); ++t) {
        const Image frame = source.get(static_cast<int>(t));
        const Image overlay = render_overlay(frame, predictions.poses[t], topology);
        std::snprintf(name, sizeof(name), "overlay_%04zu.png", t);
        save_image(overlay, (fs::path(out_dir) / name).string());
    }
    std::cout << "rendered " << predictions.poses.size() << " overlay(s) to " << out_dir << "\n";
    return 0;
}

int run_bench(int width, int height, std::vector<int> radii, int rings, int ring_stride, int runs,
              unsigned seed, const std::string& out_path) {
    if (width < 64 || height < 64)
        throw Error(ErrorCode::ZeroSizeImage, "bench needs at least a 64x64 image");
    Image image = Image::zeros(width, height);
    std::mt19937 rng(seed);
    for (auto& plane : image.planes)
        for (double& v : plane) v = rng() / 4294967296.0;

    const AnnulusGeometry geometry = AnnulusGeometry::square_rings(rings, ring_stride);
    const Vec2 center{width / 2.0, height / 2.0};
    if (radii.empty()) radii = {7, 15};
    std::sort(radii.begin(), radii.end());

    auto median_seconds = [runs](const std::function<void()>& body) {
        std::vector<double> samples;
        for (int i = 0; i < runs; ++i) {
            const auto start = std::chrono::steady_clock::now();
            body();
            const auto stop = std::chrono::steady_clock::now();
            samples.push_back(std::chrono::duration<double>(stop - start).count());
        }
        std::sort(samples.begin(), samples.end());
        return samples[samples.size() / 2];
    };

    json doc;
    doc["image"] = {{"width", width}, {"height", height}};
    doc["rings"] = rings;
    doc["ring_stride"] = ring_stride;
    doc["runs"] = runs;
    doc["hardware_threads"] = std::thread::hardware_concurrency();
#if defined(__clang__)
    doc["compiler"] = std::string("clang ") + __clang_version__;
#elif defined(__GNUC__)
    doc["compiler"] = std::string("gcc ") + std::to_string(__GNUC__) + "." +
                      std::to_string(__GNUC_MINOR__) + "." + std::to_string(__GNUC_PATCHLEVEL__);
#else
    doc["compiler"] = "unknown";
#endif
#ifdef NDEBUG
    doc["optimized_build"] = true;
#else
    doc["optimized_build"] = false;
#endif

    volatile double sink = 0.0;

    // Per-frame preprocessing is shared by every part's window, so it is timed
    // once and kept out of the per-window comparison.
    const double build_s = median_seconds([&] {
        const IntegralSet integrals = build_integral(image);
        sink = sink + integrals.channels[0].prefix(1, 1);
    });
    const double grad_s = median_seconds([&] {
        const GradientMaps gradients = gradient_maps(image);
        sink = sink + gradients.du_abs[0][0];
    });
    const IntegralSet integrals = build_integral(image);
    const GradientMaps gradients = gradient_maps(image);

    char line[160];
    std::snprintf(line, sizeof(line),
                  "per-frame preprocessing (median of %d): summed grids %.6f s, gradient maps %.6f s\n",
                  runs, build_s, grad_s);
    std::cout << line;
    doc["preprocess"] = {{"summed_grid_seconds", build_s}, {"gradient_map_seconds", grad_s}};

    std::cout << "descriptor extraction, one part over a full search window (seconds per window, "
                 "median of "
              << runs << ")\n";
    std::cout << "window\tcandidates\tsummed-grid\tper-pixel\tspeedup\n";

    json sweep = json::array();
    for (int radius : radii) {
        std::vector<Vec2> candidates;
        for (int dv = -radius; dv <= radius; ++dv)
            for (int du = -radius; du <= radius; ++du)
                candidates.push_back({center.u + du, center.v + dv});

        const double integral_s = median_seconds([&] {
            double acc = 0.0;
            for (const Vec2& c : candidates) acc += extract_descriptor(integrals, c, geometry)[0];
            sink = sink + acc;
        });
        const double naive_s = median_seconds([&] {
            double acc = 0.0;
            for (const Vec2& c : candidates)
                acc += extract_descriptor_per_pixel(image, gradients, c, geometry)[0];
            sink = sink + acc;
        });

        const int side = 2 * radius + 1;
        char row[160];
        std::snprintf(row, sizeof(row), "%dx%d\t%zu\t%.6f\t%.6f\t%.2fx\n", side, side,
                      candidates.size(), integral_s, naive_s, naive_s / integral_s);
        std::cout << row;
        sweep.push_back({{"window_radius", radius},
                         {"candidates", candidates.size()},
                         {"integral_seconds", integral_s},
                         {"per_pixel_seconds", naive_s},
                         {"speedup", naive_s / integral_s}});
    }
    doc["sweep"] = std::move(sweep);
    if (!out_path.empty()) write_or_print(doc.dump(2) + "\n", out_path);
    return 0;
}

int run_synth(const std::string& script_path, const std::string& out_dir) {
    const MotionScript script = load_motion_script(script_path);
    const ClipManifest manifest = synth_generate(script, out_dir);
    std::cout << "generated clip '" << manifest.id << "' (" << manifest.frames.size()
              << " frames) under " << out_dir << "\n";
    return 0;
}

} // namespace

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"articulated pose tracker"};
    app.require_subcommand(1);

    // train
    auto* train = app.add_subcommand("train", "fit temporal and spatial models from a train split");
    std::string train_config, train_manifest, train_out;
    std::optional<int> train_clusters;
    std::optional<double> train_epsilon;
    train->add_option("--config", train_config, "run config file")->required();
    train->add_option("--manifest", train_manifest, "dataset manifest")->required();
    train->add_option("--out", train_out, "model file to write")->required();
    train->add_option("--clusters", train_clusters, "spatial clusters per part");
    train->add_option("--epsilon", train_epsilon, "covariance regularizer");

    // track
    auto* track = app.add_subcommand("track", "track one clip from its first-frame annotation");
    std::string track_model, track_manifest, track_clip, track_out;
    std::optional<double> track_lambda1, track_lambda2;
    std::optional<int> track_radius, track_reinit;
    track->add_option("--model", track_model, "fitted model file")->required();
    track->add_option("--manifest", track_manifest, "dataset manifest")->required();
    track->add_option("--clip", track_clip, "clip id")->required();
    track->add_option("--out", track_out, "prediction file to write")->required();
    track->add_option("--lambda1", track_lambda1, "temporal weight");
    track->add_option("--lambda2", track_lambda2, "spatial weight");
    track->add_option("--window-radius", track_radius, "search window radius, pixels");
    track->add_option("--reinit-interval", track_reinit, "reset from ground truth every N frames");

    // eval
    auto* eval = app.add_subcommand("eval", "score predictions against ground truth");
    std::string eval_predictions, eval_manifest, eval_clip, eval_annotation, eval_config;
    std::string eval_format = "text", eval_out, eval_pcp_out;
    std::vector<double> eval_thresholds{5, 10, 15, 20, 25, 30, 35, 40};
    bool eval_pcp = false;
    double eval_ratio = 0.5;
    eval->add_option("--predictions", eval_predictions, "prediction file")->required();
    eval->add_option("--manifest", eval_manifest, "dataset manifest holding the ground truth");
    eval->add_option("--clip", eval_clip, "clip id (default: the prediction file's clip)");
    eval->add_option("--annotation", eval_annotation, "ground-truth annotation (bypasses --manifest)");
    eval->add_option("--config", eval_config, "run config (needed for --pcp limb structure)");
    eval->add_option("--thresholds", eval_thresholds, "accuracy thresholds, pixels")
        ->delimiter(',');
    eval->add_flag("--pcp", eval_pcp, "also score limbs");
    eval->add_option("--ratio", eval_ratio, "limb-length fraction for a correct part");
    eval->add_option("--format", eval_format, "text, csv, or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    eval->add_option("--out", eval_out, "write the report here instead of stdout");
    eval->add_option("--pcp-out", eval_pcp_out, "write the limb report here");

    // render
    auto* render = app.add_subcommand("render", "overlay predictions on the clip frames");
    std::string render_predictions, render_manifest, render_clip, render_config, render_out;
    render->add_option("--predictions", render_predictions, "prediction file")->required();
    render->add_option("--manifest", render_manifest, "dataset manifest")->required();
    render->add_option("--clip", render_clip, "clip id (default: the prediction file's clip)");
    render->add_option("--config", render_config, "run config for the limb structure")->required();
    render->add_option("--out-dir", render_out, "directory for overlay images")->required();

    // bench
    auto* bench = app.add_subcommand("bench", "time descriptor extraction paths");
    int bench_width = 320, bench_height = 240, bench_rings = 10, bench_stride = 2, bench_runs = 5;
    unsigned bench_seed = 17;
    std::vector<int> bench_radii;
    std::string bench_out;
    bench->add_option("--width", bench_width, "image width");
    bench->add_option("--height", bench_height, "image height");
    bench->add_option("--windows", bench_radii, "window radii to sweep")->delimiter(',');
    bench->add_option("--rings", bench_rings, "descriptor rings");
    bench->add_option("--ring-stride", bench_stride, "ring half-extent step");
    bench->add_option("--runs", bench_runs, "timing repetitions per point")
        ->check(CLI::PositiveNumber);
    bench->add_option("--seed", bench_seed, "noise seed");
    bench->add_option("--out", bench_out, "also write a JSON report here");

    // synth
    auto* synth = app.add_subcommand("synth", "generate a scripted synthetic clip");
    std::string synth_script, synth_out;
    synth->add_option("--script", synth_script, "motion script JSON")->required();
    synth->add_option("--out-dir", synth_out, "output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*train)
            return run_train(train_config, train_manifest, train_out, train_clusters, train_epsilon);
        if (*track)
            return run_track(track_model, track_manifest, track_clip, track_out, track_lambda1,
                             track_lambda2, track_radius, track_reinit);
        if (*eval)
            return run_eval(eval_predictions, eval_manifest, eval_clip, eval_annotation, eval_config,
                            eval_thresholds, eval_pcp, eval_ratio, eval_format, eval_out,
                            eval_pcp_out);
        if (*render)
            return run_render(render_predictions, render_manifest, render_clip, render_config,
                              render_out);
        if (*bench)
            return run_bench(bench_width, bench_height, bench_radii, bench_rings, bench_stride,
                             bench_runs, bench_seed, bench_out);
        if (*synth) return run_synth(synth_script, synth_out);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

} // namespace posetrack
