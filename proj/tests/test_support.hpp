#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "polydiag/core.hpp"

namespace polydiag::testing {

inline IntegerMatrix three_vertex_matrix() { return IntegerMatrix({{0, -1, 2}, {0, -1, 0}, {2, -1, 0}}); }

inline ColoringVector cv(std::vector<int> e) { return ColoringVector(std::move(e)); }

inline IntegerMatrix random_matrix(std::mt19937& rng, std::size_t n, int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    IntegerMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(rng);
    return m;
}

/// Random coloring vector built position by position from the definition.
inline ColoringVector random_coloring(std::mt19937& rng, std::size_t n) {
    std::vector<int> c(n);
    c[0] = std::uniform_int_distribution<int>(0, 1)(rng);
    int mx = c[0];
    for (std::size_t i = 1; i < n; ++i) {
        c[i] = std::uniform_int_distribution<int>(-mx, mx + 1)(rng);
        mx = std::max(mx, c[i]);
    }
    return ColoringVector(c);
}

inline std::set<ColoringVector> as_set(const std::vector<ColoringVector>& v) { return {v.begin(), v.end()}; }

}  // namespace polydiag::testing

namespace polydiag::testing {

/// All coloring vectors of length n, generated directly from the definition.
inline std::vector<ColoringVector> colorings_by_definition(std::size_t n) {
    std::vector<ColoringVector> out;
    std::vector<int> c(n);
    auto rec = [&](auto&& self, std::size_t i, int mx) -> void {
        if (i == n) {
            out.push_back(ColoringVector::trusted(c));
            return;
        }
        int lo = i == 0 ? 0 : -mx;
        int hi = i == 0 ? 1 : mx + 1;
        for (int v = lo; v <= hi; ++v) {
            c[i] = v;
            self(self, i + 1, i == 0 ? v : std::max(mx, v));
        }
    };
    rec(rec, 0, 0);
    return out;
}

}  // namespace polydiag::testing
