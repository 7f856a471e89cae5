#include "posetrack/skeleton.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "posetrack/errors.hpp"

namespace posetrack {

int SkeletonTopology::index_of(const std::string& name) const {
    for (int i = 0; i < part_count(); ++i) {
        if (parts[i] == name) return i;
    }
    return -1;
}

SkeletonTopology SkeletonTopology::create(std::vector<std::string> parts,
                                          std::vector<std::optional<int>> parent) {
    SkeletonTopology topo;
    topo.parts = std::move(parts);
    topo.parent = std::move(parent);
    topo.root_index = -1;
    for (int i = 0; i < topo.part_count(); ++i) {
        if (!topo.parent[i].has_value()) {
            topo.root_index = i;
            break;
        }
    }
    validate(topo);
    return topo;
}

namespace {

std::string join_names(const SkeletonTopology& topo, const std::vector<int>& indices) {
    std::ostringstream out;
    for (size_t i = 0; i < indices.size(); ++i) {
        if (i) out << ", ";
        out << topo.parts[indices[i]];
    }
    return out.str();
}

} // namespace

void validate(const SkeletonTopology& topology) {
    const int n = topology.part_count();
    if (static_cast<int>(topology.parent.size()) != n)
        throw Error(ErrorCode::InvalidParent, "parent list length differs from part list length");

    std::set<std::string> seen;
    for (int i = 0; i < n; ++i) {
        if (topology.parts[i].empty())
            throw Error(ErrorCode::DuplicateName, "part " + std::to_string(i) + " has an empty name");
        if (!seen.insert(topology.parts[i]).second)
            throw Error(ErrorCode::DuplicateName, "part name '" + topology.parts[i] + "' appears more than once");
    }
    for (int i = 0; i < n; ++i) {
        if (topology.parent[i] && (*topology.parent[i] < 0 || *topology.parent[i] >= n))
            throw Error(ErrorCode::InvalidParent,
                        "part '" + topology.parts[i] + "' has parent index out of range");
        if (topology.parent[i] && *topology.parent[i] == i)
            throw Error(ErrorCode::CycleDetected, "part '" + topology.parts[i] + "' is its own parent");
    }

    // Walk each parent chain; revisiting a node within one walk is a cycle.
    for (int start = 0; start < n; ++start) {
        std::vector<char> on_path(n, 0);
        std::vector<int> path;
        int cur = start;
        while (topology.parent[cur]) {
            if (on_path[cur]) {
                std::vector<int> cycle(path.begin() + (std::find(path.begin(), path.end(), cur) - path.begin()),
                                       path.end());
                throw Error(ErrorCode::CycleDetected, "parent links cycle through: " + join_names(topology, cycle));
            }
            on_path[cur] = 1;
            path.push_back(cur);
            cur = *topology.parent[cur];
        }
    }

    std::vector<int> roots;
    for (int i = 0; i < n; ++i) {
        if (!topology.parent[i]) roots.push_back(i);
    }
    if (roots.empty())
        throw Error(ErrorCode::NoRoot, "no part is parentless");
    if (roots.size() > 1)
        throw Error(ErrorCode::MultipleRoots, "parentless parts: " + join_names(topology, roots));
    if (topology.root_index != roots[0])
        throw Error(ErrorCode::NoRoot,
                    "root_index does not name the parentless part '" + topology.parts[roots[0]] + "'");
}

std::vector<int> traversal_order(const SkeletonTopology& topology) {
    validate(topology);
    const int n = topology.part_count();
    std::vector<std::vector<int>> children(n);
    for (int i = 0; i < n; ++i) {
        if (topology.parent[i]) children[*topology.parent[i]].push_back(i);
    }
    std::vector<int> order;
    order.reserve(n);
    std::vector<int> stack{topology.root_index};
    while (!stack.empty()) {
        const int node = stack.back();
        stack.pop_back();
        order.push_back(node);
        // push in reverse so declaration order pops first
        for (auto it = children[node].rbegin(); it != children[node].rend(); ++it) stack.push_back(*it);
    }
    return order;
}

} // namespace posetrack
