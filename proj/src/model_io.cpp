#include <fstream>

#include <json.hpp>

#include "posetrack/errors.hpp"
#include "posetrack/models.hpp"

namespace posetrack {

namespace {

using nlohmann::json;

constexpr const char* kFormat = "posetrack-model";
constexpr int kVersion = 1;

json gaussian_to_json(const GaussianParams& g) {
    return json{{"mean", {g.mean.u, g.mean.v}},
                {"covariance", {g.covariance.a, g.covariance.b, g.covariance.c, g.covariance.d}}};
}

GaussianParams gaussian_from_json(const json& j) {
    const auto& mean = j.at("mean");
    const auto& cov = j.at("covariance");
    if (mean.size() != 2 || cov.size() != 4)
        throw Error(ErrorCode::CorruptFile, "gaussian entry has wrong arity");
    return GaussianParams::from_moments(
        Vec2(mean[0].get<double>(), mean[1].get<double>()),
        Mat2{cov[0].get<double>(), cov[1].get<double>(), cov[2].get<double>(), cov[3].get<double>()});
}

} // namespace

void save_model(const PoseModel& model, const std::filesystem::path& path) {
    json doc;
    doc["format"] = kFormat;
    doc["version"] = kVersion;
    json parents = json::array();
    for (const auto& p : model.topology.parent) parents.push_back(p ? json(*p) : json(-1));
    doc["topology"] = {{"parts", model.topology.parts}, {"parents", parents}};
    doc["geometry"] = {{"half_widths", model.geometry.half_widths},
                       {"half_heights", model.geometry.half_heights}};
    doc["lambda1"] = model.lambda1;
    doc["lambda2"] = model.lambda2;
    doc["window_radius"] = model.window_radius;
    doc["cluster_count"] = model.cluster_count;
    doc["epsilon"] = model.epsilon;

    json temporal = json::array();
    for (const auto& g : model.temporal.per_part) temporal.push_back(gaussian_to_json(g));
    doc["temporal"] = temporal;

    json spatial = json::array();
    for (const auto& clusters : model.spatial.clusters_per_part) {
        json arr = json::array();
        for (const auto& g : clusters) arr.push_back(gaussian_to_json(g));
        spatial.push_back(arr);
    }
    doc["spatial"] = spatial;

    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::IoFailure, "cannot open '" + path.string() + "' for writing");
    out << doc.dump(2) << "\n";
    if (!out) throw Error(ErrorCode::IoFailure, "write failed for '" + path.string() + "'");
}

PoseModel load_model(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoFailure, "cannot open model file '" + path.string() + "'");
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::CorruptFile, "model file '" + path.string() + "': " + e.what());
    }
    try {
        if (doc.value("format", "") != kFormat)
            throw Error(ErrorCode::SchemaVersionMismatch,
                        "'" + path.string() + "' is not a " + kFormat + " document");
        if (doc.at("version").get<int>() != kVersion)
            throw Error(ErrorCode::SchemaVersionMismatch,
                        "model file version " + doc.at("version").dump() + ", expected " +
                            std::to_string(kVersion));

        PoseModel model;
        std::vector<std::string> parts = doc.at("topology").at("parts").get<std::vector<std::string>>();
        std::vector<std::optional<int>> parents;
        for (const auto& p : doc.at("topology").at("parents")) {
            const int idx = p.get<int>();
            parents.push_back(idx < 0 ? std::nullopt : std::optional<int>(idx));
        }
        model.topology = SkeletonTopology::create(std::move(parts), std::move(parents));

        model.geometry.half_widths = doc.at("geometry").at("half_widths").get<std::vector<int>>();
        model.geometry.half_heights = doc.at("geometry").at("half_heights").get<std::vector<int>>();
        validate(model.geometry);

        model.lambda1 = doc.at("lambda1").get<double>();
        model.lambda2 = doc.at("lambda2").get<double>();
        model.window_radius = doc.at("window_radius").get<int>();
        model.cluster_count = doc.at("cluster_count").get<int>();
        model.epsilon = doc.at("epsilon").get<double>();

        for (const auto& g : doc.at("temporal")) model.temporal.per_part.push_back(gaussian_from_json(g));
        for (const auto& clusters : doc.at("spatial")) {
            std::vector<GaussianParams> list;
            for (const auto& g : clusters) list.push_back(gaussian_from_json(g));
            model.spatial.clusters_per_part.push_back(std::move(list));
        }

        const size_t n = model.topology.parts.size();
        if (model.temporal.per_part.size() != n || model.spatial.clusters_per_part.size() != n)
            throw Error(ErrorCode::CorruptFile, "model arrays disagree with the part count");
        for (size_t i = 0; i < n; ++i) {
            const bool is_root = static_cast<int>(i) == model.topology.root_index;
            if (is_root != model.spatial.clusters_per_part[i].empty())
                throw Error(ErrorCode::CorruptFile,
                            "spatial clusters inconsistent for part '" + model.topology.parts[i] + "'");
        }
        return model;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::CorruptFile, "model file '" + path.string() + "': " + e.what());
    }
}

} // namespace posetrack
