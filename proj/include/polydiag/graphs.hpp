#pragma once

#include <utility>
#include <vector>

#include "polydiag/core.hpp"

// Named graphs used by the benchmark, the acceptance suite and the tests.

namespace polydiag::graphs {

using EdgeList = std::vector<std::pair<int, int>>;  // 0-based, undirected

EdgeList cycle(std::size_t n);
EdgeList path(std::size_t n);
EdgeList petersen();
/// Truncated icosahedron (60 vertices, 90 edges).
EdgeList buckyball();

IntegerMatrix adjacency(std::size_t n, const EdgeList& edges);
IntegerMatrix laplacian(std::size_t n, const EdgeList& edges);

}  // namespace polydiag::graphs
