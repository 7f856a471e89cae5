#pragma once

#include <optional>
#include <string>
#include <vector>

#include "posetrack/geometry.hpp"

namespace posetrack {

/// Part tree of the articulated figure. Parts keep their declaration
/// order; every non-root part points at its parent by index.
struct SkeletonTopology {
    std::vector<std::string> parts;
    std::vector<std::optional<int>> parent; // nullopt for the root
    int root_index = -1;

    int part_count() const { return static_cast<int>(parts.size()); }
    int index_of(const std::string& name) const; // -1 when absent

    /// Builds a topology from names and parent links and validates it.
    static SkeletonTopology create(std::vector<std::string> parts,
                                   std::vector<std::optional<int>> parent);
};

/// Checks all topology invariants: unique non-empty names, acyclic parent
/// links, exactly one root, root_index consistent. Throws Error with the
/// offending part names on failure.
void validate(const SkeletonTopology& topology);

/// Parent-before-child visit order used by the tracker: depth-first from
/// the root, children in declaration order.
std::vector<int> traversal_order(const SkeletonTopology& topology);

/// Per-part positions for one frame, aligned with the topology part
/// order. Absent entries mark unannotated/occluded joints.
struct Pose {
    std::vector<std::optional<Vec2>> positions;
    int frame_index = 0;
};

} // namespace posetrack
