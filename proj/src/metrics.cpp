#include "posetrack/metrics.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "posetrack/errors.hpp"

namespace posetrack {

namespace {

using nlohmann::json;

void check_aligned(const std::vector<Pose>& predicted, const std::vector<Pose>& ground_truth,
                   size_t part_count) {
    if (predicted.size() != ground_truth.size())
        throw Error(ErrorCode::LengthMismatch, std::to_string(predicted.size()) + " predicted vs " +
                                                   std::to_string(ground_truth.size()) +
                                                   " ground-truth frames");
    for (size_t t = 0; t < predicted.size(); ++t) {
        if (predicted[t].positions.size() != part_count || ground_truth[t].positions.size() != part_count)
            throw Error(ErrorCode::LengthMismatch,
                        "frame " + std::to_string(t) + " does not match the part count");
    }
}

std::string pooled_group(const std::string& part) {
    for (const char* prefix : {"left_", "right_", "Left_", "Right_"}) {
        if (part.rfind(prefix, 0) == 0) return part.substr(std::string(prefix).size());
    }
    return part;
}

std::string format2(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", value);
    return buf;
}

} // namespace

AccuracyReport localization_accuracy(const std::vector<Pose>& predicted,
                                     const std::vector<Pose>& ground_truth,
                                     const std::vector<double>& thresholds,
                                     const std::vector<std::string>& part_names) {
    const size_t n = part_names.size();
    check_aligned(predicted, ground_truth, n);

    AccuracyReport report;
    report.parts = part_names;
    report.thresholds = thresholds;
    report.percent.assign(n, std::vector<double>(thresholds.size(), 0.0));
    report.evaluated_frames.assign(n, 0);

    std::vector<std::vector<int>> hits(n, std::vector<int>(thresholds.size(), 0));
    for (size_t t = 0; t < predicted.size(); ++t) {
        for (size_t p = 0; p < n; ++p) {
            const auto& truth = ground_truth[t].positions[p];
            if (!truth) continue; // absent joints excluded
            const auto& guess = predicted[t].positions[p];
            if (!guess)
                throw Error(ErrorCode::MissingPrediction,
                            "part '" + part_names[p] + "' unpredicted at frame " + std::to_string(t));
            ++report.evaluated_frames[p];
            const double err = (*guess - *truth).norm();
            for (size_t k = 0; k < thresholds.size(); ++k) {
                if (err < thresholds[k]) ++hits[p][k];
            }
        }
    }

    for (size_t p = 0; p < n; ++p) {
        if (report.evaluated_frames[p] == 0)
            throw Error(ErrorCode::NoEvaluableFrames,
                        "part '" + part_names[p] + "' has no annotated frames to evaluate");
        for (size_t k = 0; k < thresholds.size(); ++k)
            report.percent[p][k] = 100.0 * hits[p][k] / report.evaluated_frames[p];
    }

    report.aggregate.assign(thresholds.size(), 0.0);
    for (size_t k = 0; k < thresholds.size(); ++k) {
        double sum = 0.0;
        for (size_t p = 0; p < n; ++p) sum += report.percent[p][k];
        report.aggregate[k] = n ? sum / static_cast<double>(n) : 0.0;
    }

    // Left/right pooled view: merge the underlying frame counts, not the
    // percentages, so uneven annotation coverage cannot skew a group.
    std::vector<std::vector<int>> group_hits;
    for (size_t p = 0; p < n; ++p) {
        const std::string group = pooled_group(part_names[p]);
        auto it = std::find(report.pooled_groups.begin(), report.pooled_groups.end(), group);
        size_t gi;
        if (it == report.pooled_groups.end()) {
            gi = report.pooled_groups.size();
            report.pooled_groups.push_back(group);
            report.pooled_evaluated.push_back(0);
            group_hits.emplace_back(thresholds.size(), 0);
        } else {
            gi = static_cast<size_t>(it - report.pooled_groups.begin());
        }
        report.pooled_evaluated[gi] += report.evaluated_frames[p];
        for (size_t k = 0; k < thresholds.size(); ++k) group_hits[gi][k] += hits[p][k];
    }
    report.pooled_percent.assign(report.pooled_groups.size(),
                                 std::vector<double>(thresholds.size(), 0.0));
    for (size_t g = 0; g < report.pooled_groups.size(); ++g) {
        for (size_t k = 0; k < thresholds.size(); ++k)
            report.pooled_percent[g][k] = 100.0 * group_hits[g][k] / report.pooled_evaluated[g];
    }
    return report;
}

std::vector<Limb> limbs_from_topology(const SkeletonTopology& topology) {
    std::vector<Limb> limbs;
    for (int i = 0; i < topology.part_count(); ++i) {
        if (!topology.parent[i]) continue;
        Limb limb;
        limb.a = *topology.parent[i];
        limb.b = i;
        limb.name = topology.parts[limb.a] + "-" + topology.parts[i];
        limbs.push_back(limb);
    }
    return limbs;
}

PcpReport pcp(const std::vector<Pose>& predicted, const std::vector<Pose>& ground_truth,
              const std::vector<Limb>& limbs, double ratio) {
    size_t part_count = 0;
    if (!ground_truth.empty()) part_count = ground_truth.front().positions.size();
    check_aligned(predicted, ground_truth, part_count);

    PcpReport report;
    report.limbs = limbs;
    report.ratio = ratio;
    report.scores.assign(limbs.size(), 0.0);
    report.evaluated_frames.assign(limbs.size(), 0);
    report.skipped_zero_length.assign(limbs.size(), 0);

    for (size_t li = 0; li < limbs.size(); ++li) {
        const Limb& limb = limbs[li];
        if (limb.a < 0 || limb.b < 0 || limb.a >= static_cast<int>(part_count) ||
            limb.b >= static_cast<int>(part_count))
            throw Error(ErrorCode::LengthMismatch, "limb '" + limb.name + "' endpoints out of range");
        int correct = 0;
        for (size_t t = 0; t < predicted.size(); ++t) {
            const auto& gt_a = ground_truth[t].positions[limb.a];
            const auto& gt_b = ground_truth[t].positions[limb.b];
            if (!gt_a || !gt_b) continue;
            const auto& pr_a = predicted[t].positions[limb.a];
            const auto& pr_b = predicted[t].positions[limb.b];
            if (!pr_a || !pr_b)
                throw Error(ErrorCode::MissingPrediction,
                            "limb '" + limb.name + "' unpredicted at frame " + std::to_string(t));
            const double length = (*gt_a - *gt_b).norm();
            if (length == 0.0) {
                ++report.skipped_zero_length[li];
                continue;
            }
            ++report.evaluated_frames[li];
            if ((*pr_a - *gt_a).norm() <= ratio * length && (*pr_b - *gt_b).norm() <= ratio * length)
                ++correct;
        }
        report.scores[li] =
            report.evaluated_frames[li] ? static_cast<double>(correct) / report.evaluated_frames[li] : 0.0;
    }

    double sum = 0.0;
    for (double s : report.scores) sum += s;
    report.average = limbs.empty() ? 0.0 : sum / static_cast<double>(limbs.size());
    return report;
}

std::string accuracy_report_text(const AccuracyReport& report) {
    std::ostringstream out;
    out << "part";
    for (double t : report.thresholds) out << "\tacc@" << t;
    out << "\tframes\n";
    for (size_t p = 0; p < report.parts.size(); ++p) {
        out << report.parts[p];
        for (size_t k = 0; k < report.thresholds.size(); ++k) out << "\t" << format2(report.percent[p][k]);
        out << "\t" << report.evaluated_frames[p] << "\n";
    }
    out << "average";
    for (size_t k = 0; k < report.thresholds.size(); ++k) out << "\t" << format2(report.aggregate[k]);
    out << "\t-\n";
    if (report.pooled_groups.size() != report.parts.size()) {
        out << "\npooled (left/right merged):\n";
        for (size_t g = 0; g < report.pooled_groups.size(); ++g) {
            out << report.pooled_groups[g];
            for (size_t k = 0; k < report.thresholds.size(); ++k)
                out << "\t" << format2(report.pooled_percent[g][k]);
            out << "\t" << report.pooled_evaluated[g] << "\n";
        }
    }
    return out.str();
}

std::string accuracy_report_csv(const AccuracyReport& report) {
    std::ostringstream out;
    out << "part,frames";
    for (double t : report.thresholds) out << ",acc@" << t;
    out << "\n";
    char buf[40];
    auto emit_row = [&](const std::string& name, int frames, const std::vector<double>& row) {
        out << name << "," << frames;
        for (double v : row) {
            std::snprintf(buf, sizeof(buf), "%.17g", v);
            out << "," << buf;
        }
        out << "\n";
    };
    for (size_t p = 0; p < report.parts.size(); ++p)
        emit_row(report.parts[p], report.evaluated_frames[p], report.percent[p]);
    for (size_t g = 0; g < report.pooled_groups.size(); ++g)
        emit_row("pooled:" + report.pooled_groups[g], report.pooled_evaluated[g], report.pooled_percent[g]);
    emit_row("average", 0, report.aggregate);
    return out.str();
}

std::string accuracy_report_json(const AccuracyReport& report) {
    json doc;
    doc["parts"] = report.parts;
    doc["thresholds"] = report.thresholds;
    doc["percent"] = report.percent;
    doc["evaluated_frames"] = report.evaluated_frames;
    doc["average"] = report.aggregate;
    doc["pooled_groups"] = report.pooled_groups;
    doc["pooled_percent"] = report.pooled_percent;
    doc["pooled_evaluated"] = report.pooled_evaluated;
    return doc.dump(2);
}

std::string pcp_report_text(const PcpReport& report) {
    std::ostringstream out;
    out << "limb\tpcp\tframes\tskipped\n";
    for (size_t i = 0; i < report.limbs.size(); ++i) {
        out << report.limbs[i].name << "\t" << format2(report.scores[i]) << "\t"
            << report.evaluated_frames[i] << "\t" << report.skipped_zero_length[i] << "\n";
    }
    out << "average\t" << format2(report.average) << "\t-\t-\n";
    return out.str();
}

std::string pcp_report_csv(const PcpReport& report) {
    std::ostringstream out;
    out << "limb,pcp,frames,skipped\n";
    char buf[40];
    for (size_t i = 0; i < report.limbs.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.17g", report.scores[i]);
        out << report.limbs[i].name << "," << buf << "," << report.evaluated_frames[i] << ","
            << report.skipped_zero_length[i] << "\n";
    }
    std::snprintf(buf, sizeof(buf), "%.17g", report.average);
    out << "average," << buf << ",0,0\n";
    return out.str();
}

std::string pcp_report_json(const PcpReport& report) {
    json doc;
    json limbs = json::array();
    for (const Limb& limb : report.limbs)
        limbs.push_back({{"name", limb.name}, {"a", limb.a}, {"b", limb.b}});
    doc["limbs"] = limbs;
    doc["scores"] = report.scores;
    doc["evaluated_frames"] = report.evaluated_frames;
    doc["skipped_zero_length"] = report.skipped_zero_length;
    doc["average"] = report.average;
    doc["ratio"] = report.ratio;
    return doc.dump(2);
}

} // namespace posetrack
