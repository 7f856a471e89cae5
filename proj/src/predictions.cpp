#include "posetrack/predictions.hpp"

#include <fstream>

#include <json.hpp>

#include "posetrack/errors.hpp"

namespace posetrack {

using nlohmann::json;

PredictionFile load_predictions(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoFailure, "cannot open '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::CorruptFile, "'" + path + "': " + e.what());
    }

    PredictionFile predictions;
    try {
        predictions.clip = doc.at("clip").get<std::string>();
        predictions.parts = doc.at("parts").get<std::vector<std::string>>();
        int frame_index = 0;
        for (const json& row : doc.at("poses")) {
            Pose pose;
            pose.frame_index = frame_index++;
            for (const json& joint : row) {
                if (joint.is_null())
                    pose.positions.emplace_back(std::nullopt);
                else
                    pose.positions.emplace_back(Vec2{joint.at(0).get<double>(), joint.at(1).get<double>()});
            }
            if (pose.positions.size() != predictions.parts.size())
                throw Error(ErrorCode::CorruptFile,
                            "'" + path + "' frame " + std::to_string(pose.frame_index) +
                                " does not match the part list");
            predictions.poses.push_back(std::move(pose));
        }
    } catch (const json::exception& e) {
        throw Error(ErrorCode::CorruptFile, "'" + path + "': " + e.what());
    }
    return predictions;
}

void save_predictions(const PredictionFile& predictions, const std::string& path) {
    json poses = json::array();
    for (const Pose& pose : predictions.poses) {
        json row = json::array();
        for (const auto& joint : pose.positions) {
            if (joint)
                row.push_back(json::array({joint->u, joint->v}));
            else
                row.push_back(nullptr);
        }
        poses.push_back(std::move(row));
    }
    json doc;
    doc["clip"] = predictions.clip;
    doc["parts"] = predictions.parts;
    doc["poses"] = std::move(poses);

    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::IoFailure, "cannot open '" + path + "' for writing");
    out << doc.dump(2) << "\n";
    if (!out) throw Error(ErrorCode::IoFailure, "short write to '" + path + "'");
}

} // namespace posetrack
