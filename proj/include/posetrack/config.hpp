#pragma once

#include <optional>
#include <string>
#include <vector>

#include "posetrack/descriptor.hpp"
#include "posetrack/skeleton.hpp"

namespace posetrack {

// Everything the CLI reads from its INI-style config file.  Defaults match
// the recommended settings; any field may be overridden by a CLI flag.
//
//   [topology]
//   part = head            ; parentless part becomes the root
//   part = neck head       ; "name parent"
//
//   [descriptor]
//   rings = 10
//   ring_stride = 2
//
//   [model]
//   clusters = 6
//   epsilon = 1e-4
//
//   [tracker]
//   lambda1 = 0.7
//   lambda2 = 0.2
//   window_radius = 15
//   reinit_interval = 60   ; omit to disable reinitialization
//
// '#' and ';' start comments.  Parents may be declared in any order.
struct RunConfig {
    std::vector<std::string> parts;
    std::vector<std::optional<std::string>> parent_names;

    int rings = 10;
    int ring_stride = 2;
    int clusters = 6;
    double epsilon = 1e-4;
    double lambda1 = 0.7;
    double lambda2 = 0.2;
    int window_radius = 15;
    std::optional<int> reinit_interval;

    SkeletonTopology topology() const;
    AnnulusGeometry geometry() const { return AnnulusGeometry::square_rings(rings, ring_stride); }
};

// `source` names the input in error messages (a path, or "<string>").
RunConfig parse_config(const std::string& text, const std::string& source);
RunConfig load_config(const std::string& path);

} // namespace posetrack
