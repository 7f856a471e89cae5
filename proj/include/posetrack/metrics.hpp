#pragma once

#include <string>
#include <vector>

#include "posetrack/skeleton.hpp"

namespace posetrack {

/// Keypoint localization accuracy per part over a sweep of deviation
/// thresholds, plus the mean over parts and a left/right-pooled view.
struct AccuracyReport {
    std::vector<std::string> parts;
    std::vector<double> thresholds;
    std::vector<std::vector<double>> percent; // [part][threshold], 0..100
    std::vector<int> evaluated_frames;        // per part
    std::vector<double> aggregate;            // mean over parts, per threshold

    std::vector<std::string> pooled_groups; // left_/right_ prefixes merged
    std::vector<std::vector<double>> pooled_percent;
    std::vector<int> pooled_evaluated;
};

struct Limb {
    int a = -1;
    int b = -1;
    std::string name;
};

struct PcpReport {
    std::vector<Limb> limbs;
    std::vector<double> scores; // per limb, 0..1
    std::vector<int> evaluated_frames;
    std::vector<int> skipped_zero_length;
    double average = 0.0;
    double ratio = 0.5;
};

/// Percentage of frames whose prediction error stays strictly below each
/// threshold, skipping frames where the ground-truth joint is absent.
AccuracyReport localization_accuracy(const std::vector<Pose>& predicted,
                                     const std::vector<Pose>& ground_truth,
                                     const std::vector<double>& thresholds,
                                     const std::vector<std::string>& part_names);

/// Percentage of Correct Parts: a limb counts when both predicted
/// endpoints land within ratio times the ground-truth limb length of
/// their true positions.
PcpReport pcp(const std::vector<Pose>& predicted, const std::vector<Pose>& ground_truth,
              const std::vector<Limb>& limbs, double ratio = 0.5);

/// All tree edges child<-parent as limbs, named "parent-child".
std::vector<Limb> limbs_from_topology(const SkeletonTopology& topology);

std::string accuracy_report_text(const AccuracyReport& report);
std::string accuracy_report_csv(const AccuracyReport& report);
std::string accuracy_report_json(const AccuracyReport& report);

std::string pcp_report_text(const PcpReport& report);
std::string pcp_report_csv(const PcpReport& report);
std::string pcp_report_json(const PcpReport& report);

} // namespace posetrack
