#pragma once

#include <string>
#include <utility>
#include <vector>

#include "polydiag/core.hpp"

namespace polydiag {

/// Cover relation of a family of coloring vectors under leq_extended
/// (reverse inclusion of subspaces).
struct HasseDiagram {
    std::vector<ColoringVector> nodes;
    /// (lower, upper) node indices; lower <= upper and nothing lies strictly between.
    std::vector<std::pair<std::size_t, std::size_t>> covers;
};

/// Node order is preserved from `family`.
HasseDiagram build_poset(const std::vector<ColoringVector>& family);

/// Full order relation: leq[a][b] iff nodes[a] <= nodes[b].
std::vector<std::vector<bool>> order_matrix(const std::vector<ColoringVector>& nodes);

/// Order relation recovered from the covers by transitive closure.
std::vector<std::vector<bool>> closure_of_covers(const HasseDiagram& h);

bool is_lattice(const HasseDiagram& h);

struct DotOptions {
    std::string graph_name = "lattice";
    bool shade_synchrony = true;
};

/// DOT digraph with one node per vector and one edge per cover, ranked by
/// longest path from the minimal elements.
std::string to_dot(const HasseDiagram& h, const DotOptions& options = {});

}  // namespace polydiag
