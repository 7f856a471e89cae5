#include "posetrack/annotation.hpp"

#include <fstream>

#include <json.hpp>

#include "posetrack/errors.hpp"

namespace posetrack {

using nlohmann::json;

Annotation load_annotation(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoFailure, "cannot open '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::CorruptFile, "'" + path + "': " + e.what());
    }

    Annotation annotation;
    try {
        annotation.parts = doc.at("parts").get<std::vector<std::string>>();
        for (const json& frame : doc.at("frames")) {
            std::vector<std::optional<Vec2>> row;
            for (const json& joint : frame) {
                if (joint.is_null()) {
                    row.emplace_back(std::nullopt);
                } else {
                    row.emplace_back(Vec2{joint.at(0).get<double>(), joint.at(1).get<double>()});
                }
            }
            if (row.size() != annotation.parts.size())
                throw Error(ErrorCode::AnnotationMismatch,
                            "'" + path + "' frame " + std::to_string(annotation.frames.size()) +
                                " has " + std::to_string(row.size()) + " joints for " +
                                std::to_string(annotation.parts.size()) + " parts");
            annotation.frames.push_back(std::move(row));
        }
    } catch (const json::exception& e) {
        throw Error(ErrorCode::CorruptFile, "'" + path + "': " + e.what());
    }
    return annotation;
}

void save_annotation(const Annotation& annotation, const std::string& path) {
    json frames = json::array();
    for (const auto& frame : annotation.frames) {
        json row = json::array();
        for (const auto& joint : frame) {
            if (joint)
                row.push_back(json::array({joint->u, joint->v}));
            else
                row.push_back(nullptr);
        }
        frames.push_back(std::move(row));
    }
    json doc;
    doc["parts"] = annotation.parts;
    doc["frames"] = std::move(frames);

    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::IoFailure, "cannot open '" + path + "' for writing");
    out << doc.dump(2) << "\n";
    if (!out) throw Error(ErrorCode::IoFailure, "short write to '" + path + "'");
}

} // namespace posetrack
