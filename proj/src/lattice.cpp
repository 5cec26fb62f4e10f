#include "polydiag/lattice.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace polydiag {

std::vector<std::vector<bool>> order_matrix(const std::vector<ColoringVector>& nodes) {
    std::size_t m = nodes.size();
    std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) leq[a][b] = a == b || leq_extended(nodes[a], nodes[b]);
    return leq;
}

HasseDiagram build_poset(const std::vector<ColoringVector>& family) {
    HasseDiagram h{family, {}};
    if (family.empty()) return h;
    std::size_t n = family.front().size();
    for (const auto& c : family)
        if (c.size() != n) throw InvalidArgument("family mixes coloring vectors of different lengths");

    auto leq = order_matrix(family);
    std::size_t m = family.size();
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
            if (a == b || !leq[a][b]) continue;
            bool covered = true;
            for (std::size_t z = 0; z < m && covered; ++z)
                if (z != a && z != b && leq[a][z] && leq[z][b]) covered = false;
            if (covered) h.covers.emplace_back(a, b);
        }
    }
    return h;
}

std::vector<std::vector<bool>> closure_of_covers(const HasseDiagram& h) {
    std::size_t m = h.nodes.size();
    std::vector<std::vector<bool>> reach(m, std::vector<bool>(m, false));
    for (std::size_t a = 0; a < m; ++a) reach[a][a] = true;
    for (auto [lo, hi] : h.covers) reach[lo][hi] = true;
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t a = 0; a < m; ++a)
            if (reach[a][k])
                for (std::size_t b = 0; b < m; ++b)
                    if (reach[k][b]) reach[a][b] = true;
    return reach;
}

namespace {

// Unique least element of `candidates` under `leq`, if there is one.
bool has_least(const std::vector<std::size_t>& candidates, const std::vector<std::vector<bool>>& leq) {
    return std::any_of(candidates.begin(), candidates.end(), [&](std::size_t x) {
        return std::all_of(candidates.begin(), candidates.end(), [&](std::size_t y) { return leq[x][y]; });
    });
}

}  // namespace

bool is_lattice(const HasseDiagram& h) {
    auto leq = closure_of_covers(h);
    std::size_t m = h.nodes.size();
    std::vector<std::vector<bool>> geq(m, std::vector<bool>(m));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) geq[a][b] = leq[b][a];

    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = a + 1; b < m; ++b) {
            std::vector<std::size_t> upper, lower;
            for (std::size_t z = 0; z < m; ++z) {
                if (leq[a][z] && leq[b][z]) upper.push_back(z);
                if (leq[z][a] && leq[z][b]) lower.push_back(z);
            }
            if (!has_least(upper, leq) || !has_least(lower, geq)) return false;
        }
    }
    return true;
}

std::string to_dot(const HasseDiagram& h, const DotOptions& options) {
    std::size_t m = h.nodes.size();
    // Longest-path layering from the minimal elements.
    std::vector<std::size_t> rank(m, 0);
    for (std::size_t pass = 0; pass < m; ++pass) {
        bool changed = false;
        for (auto [lo, hi] : h.covers) {
            if (rank[hi] < rank[lo] + 1) {
                rank[hi] = rank[lo] + 1;
                changed = true;
            }
        }
        if (!changed) break;
    }

    std::ostringstream out;
    out << "digraph " << options.graph_name << " {\n";
    out << "  rankdir=BT;\n";
    out << "  node [shape=box, style=rounded, fontname=\"monospace\"];\n";
    for (std::size_t a = 0; a < m; ++a) {
        out << "  n" << a << " [label=\"" << h.nodes[a].str() << "\"";
        if (options.shade_synchrony && is_synchrony(h.nodes[a]))
            out << ", style=\"rounded,filled\", fillcolor=\"palegreen\"";
        out << "];\n";
    }
    std::map<std::size_t, std::vector<std::size_t>> layers;
    for (std::size_t a = 0; a < m; ++a) layers[rank[a]].push_back(a);
    for (const auto& [r, members] : layers) {
        if (members.size() < 2) continue;
        out << "  { rank=same;";
        for (std::size_t a : members) out << " n" << a << ";";
        out << " }\n";
    }
    for (auto [lo, hi] : h.covers) out << "  n" << lo << " -> n" << hi << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace polydiag
