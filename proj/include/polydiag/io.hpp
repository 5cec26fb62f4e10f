#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "polydiag/core.hpp"
#include "polydiag/symmetry.hpp"

// Plain-text input formats. Parse errors throw InvalidArgument naming the line.

namespace polydiag {

struct ParsedMatrix {
    IntegerMatrix matrix;
    /// Common denominator the entries were multiplied by (1 for integer input).
    Int scale = 1;
};

/// Whitespace-separated rows, blank lines skipped. Tokens are integers or p/q.
ParsedMatrix parse_matrix(std::istream& in);
ParsedMatrix parse_matrix_file(const std::string& path);

enum class GraphMatrixKind { adjacency, laplacian };

struct ParsedGraph {
    IntegerMatrix matrix;
    std::vector<std::string> warnings;
};

/// One undirected edge "u v" per line (1-based). An optional "n <count>" line
/// fixes the vertex count; otherwise it is the largest index. '#' starts a comment.
ParsedGraph parse_graph(std::istream& in, GraphMatrixKind kind);
ParsedGraph parse_graph_file(const std::string& path, GraphMatrixKind kind);

/// One permutation per line as n 1-based images, optionally preceded by "-"
/// for sign -1.
std::vector<SignedSymmetry> parse_generators(std::istream& in, std::size_t n);
std::vector<SignedSymmetry> parse_generators_file(const std::string& path, std::size_t n);

/// "1 0 -1", "1,0,-1" or "(1,0,-1)".
ColoringVector parse_coloring(const std::string& text);

}  // namespace polydiag
