#include "polydiag/graphs.hpp"

#include <array>
#include <cmath>
#include <map>

namespace polydiag::graphs {

EdgeList cycle(std::size_t n) {
    EdgeList e;
    for (std::size_t i = 0; i < n; ++i) e.emplace_back(static_cast<int>(i), static_cast<int>((i + 1) % n));
    return e;
}

EdgeList path(std::size_t n) {
    EdgeList e;
    for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(static_cast<int>(i), static_cast<int>(i + 1));
    return e;
}

EdgeList petersen() {
    // Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9.
    EdgeList e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return e;
}

EdgeList buckyball() {
    // Icosahedron vertices are the cyclic permutations of (0, +-1, +-phi);
    // two are adjacent at distance 2. Truncation puts a vertex on every
    // directed icosahedron edge (u, v), joined to (v, u) and to (u, w) for w
    // a common neighbour of u and v.
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<std::array<double, 3>> ico;
    for (double s1 : {-1.0, 1.0})
        for (double s2 : {-phi, phi}) {
            ico.push_back({0.0, s1, s2});
            ico.push_back({s1, s2, 0.0});
            ico.push_back({s2, 0.0, s1});
        }
    auto adjacent = [&](std::size_t a, std::size_t b) {
        double d = 0;
        for (int k = 0; k < 3; ++k) d += (ico[a][k] - ico[b][k]) * (ico[a][k] - ico[b][k]);
        return std::abs(d - 4.0) < 1e-9;
    };
    std::map<std::pair<std::size_t, std::size_t>, int> id;
    for (std::size_t u = 0; u < ico.size(); ++u)
        for (std::size_t v = 0; v < ico.size(); ++v)
            if (u != v && adjacent(u, v)) id.emplace(std::make_pair(u, v), static_cast<int>(id.size()));
    EdgeList e;
    for (const auto& [uv, a] : id) {
        auto [u, v] = uv;
        int back = id.at({v, u});
        if (a < back) e.emplace_back(a, back);
        for (std::size_t w = 0; w < ico.size(); ++w) {
            if (w == v || !id.count({u, w}) || !adjacent(v, w)) continue;
            int b = id.at({u, w});
            if (a < b) e.emplace_back(a, b);
        }
    }
    return e;
}

IntegerMatrix adjacency(std::size_t n, const EdgeList& edges) {
    IntegerMatrix m(n);
    for (auto [a, b] : edges) {
        m(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) = 1;
        m(static_cast<std::size_t>(b), static_cast<std::size_t>(a)) = 1;
    }
    return m;
}

IntegerMatrix laplacian(std::size_t n, const EdgeList& edges) {
    IntegerMatrix m(n);
    for (auto [a, b] : edges) {
        auto u = static_cast<std::size_t>(a);
        auto v = static_cast<std::size_t>(b);
        m(u, v) = -1;
        m(v, u) = -1;
        m(u, u) += 1;
        m(v, v) += 1;
    }
    return m;
}

}  // namespace polydiag::graphs
