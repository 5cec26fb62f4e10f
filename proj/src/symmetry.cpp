#include "polydiag/symmetry.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace polydiag {

SignedSymmetry SignedSymmetry::identity(std::size_t n) {
    SignedSymmetry g;
    g.perm.resize(n);
    std::iota(g.perm.begin(), g.perm.end(), 0);
    return g;
}

SignedSymmetry SignedSymmetry::negation(std::size_t n) {
    SignedSymmetry g = identity(n);
    g.sign = -1;
    return g;
}

bool SignedSymmetry::is_identity() const {
    if (sign != 1) return false;
    for (std::size_t i = 0; i < perm.size(); ++i)
        if (perm[i] != static_cast<int>(i)) return false;
    return true;
}

void SignedSymmetry::validate() const {
    if (sign != 1 && sign != -1) throw InvalidArgument("sign must be +1 or -1");
    std::vector<char> seen(perm.size(), 0);
    for (int p : perm) {
        if (p < 0 || static_cast<std::size_t>(p) >= perm.size() || seen[static_cast<std::size_t>(p)])
            throw InvalidArgument("not a permutation of 1.." + std::to_string(perm.size()));
        seen[static_cast<std::size_t>(p)] = 1;
    }
}

SignedSymmetry SignedSymmetry::inverse() const {
    SignedSymmetry inv;
    inv.perm.resize(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) inv.perm[static_cast<std::size_t>(perm[i])] = static_cast<int>(i);
    inv.sign = sign;
    return inv;
}

SignedSymmetry operator*(const SignedSymmetry& g, const SignedSymmetry& h) {
    if (g.degree() != h.degree()) throw InvalidArgument("degree mismatch in product");
    SignedSymmetry out;
    out.perm.resize(g.degree());
    for (std::size_t i = 0; i < g.degree(); ++i) out.perm[i] = h.perm[static_cast<std::size_t>(g.perm[i])];
    out.sign = g.sign * h.sign;
    return out;
}

std::size_t SignedSymmetryHash::operator()(const SignedSymmetry& g) const noexcept {
    std::size_t h = static_cast<std::size_t>(g.sign + 7);
    for (int p : g.perm) h = h * 1000003u ^ static_cast<std::size_t>(p);
    return h;
}

SymmetryGroup::SymmetryGroup(std::size_t degree, std::vector<SignedSymmetry> elements)
    : degree_(degree), elements_(std::move(elements)) {
    for (const auto& g : elements_) {
        if (g.degree() != degree_) throw InvalidArgument("group element has wrong degree");
        g.validate();
    }
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool SymmetryGroup::contains(const SignedSymmetry& g) const {
    return std::binary_search(elements_.begin(), elements_.end(), g);
}

bool SymmetryGroup::is_group() const {
    if (!contains(SignedSymmetry::identity(degree_))) return false;
    for (const auto& a : elements_) {
        if (!contains(a.inverse())) return false;
        for (const auto& b : elements_)
            if (!contains(a * b)) return false;
    }
    return true;
}

SymmetryGroup group_closure(std::size_t degree, const std::vector<SignedSymmetry>& generators, std::size_t cap) {
    for (const auto& g : generators) {
        if (g.degree() != degree) throw InvalidArgument("generator degree differs from " + std::to_string(degree));
        g.validate();
    }
    std::unordered_set<SignedSymmetry, SignedSymmetryHash> seen;
    std::deque<SignedSymmetry> frontier;
    auto id = SignedSymmetry::identity(degree);
    seen.insert(id);
    frontier.push_back(id);
    // Closure under right multiplication by the generators.
    while (!frontier.empty()) {
        SignedSymmetry x = std::move(frontier.front());
        frontier.pop_front();
        for (const auto& g : generators) {
            SignedSymmetry y = x * g;
            if (seen.insert(y).second) {
                if (seen.size() > cap)
                    throw InvalidArgument("group order exceeds cap of " + std::to_string(cap) + " elements");
                frontier.push_back(std::move(y));
            }
        }
    }
    return {degree, {seen.begin(), seen.end()}};
}

namespace {

class AutomorphismSearch {
public:
    explicit AutomorphismSearch(const IntegerMatrix& m) : m_(m), n_(m.size()), image_(n_, -1), used_(n_, 0) {
        // Row/column value multisets plus the diagonal are preserved by any automorphism.
        for (std::size_t i = 0; i < n_; ++i) {
            std::vector<Int> key{m(i, i)};
            std::vector<Int> row(m.row(i).begin(), m.row(i).end());
            std::vector<Int> col(n_);
            for (std::size_t j = 0; j < n_; ++j) col[j] = m(j, i);
            std::sort(row.begin(), row.end());
            std::sort(col.begin(), col.end());
            key.insert(key.end(), row.begin(), row.end());
            key.insert(key.end(), col.begin(), col.end());
            invariant_.push_back(std::move(key));
        }
    }

    std::vector<SignedSymmetry> run() {
        extend(0);
        return std::move(found_);
    }

private:
    void extend(std::size_t i) {
        if (i == n_) {
            found_.push_back({image_, 1});
            return;
        }
        for (std::size_t v = 0; v < n_; ++v) {
            if (used_[v] || invariant_[v] != invariant_[i]) continue;
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j) {
                auto w = static_cast<std::size_t>(image_[j]);
                ok = m_(v, w) == m_(i, j) && m_(w, v) == m_(j, i);
            }
            if (!ok) continue;
            image_[i] = static_cast<int>(v);
            used_[v] = 1;
            extend(i + 1);
            used_[v] = 0;
        }
        image_[i] = -1;
    }

    const IntegerMatrix& m_;
    std::size_t n_;
    std::vector<int> image_;
    std::vector<char> used_;
    std::vector<std::vector<Int>> invariant_;
    std::vector<SignedSymmetry> found_;
};

}  // namespace

SymmetryGroup graph_automorphisms(const IntegerMatrix& m, std::size_t cap) {
    if (m.size() > cap)
        throw InvalidArgument("automorphism search is limited to n <= " + std::to_string(cap) +
                              "; supply group generators from a file instead");
    return {m.size(), AutomorphismSearch(m).run()};
}

SymmetryGroup signed_symmetry_group(const IntegerMatrix& m, bool with_sign_flip, std::size_t cap) {
    SymmetryGroup aut = graph_automorphisms(m, cap);
    if (!with_sign_flip) return aut;
    std::vector<SignedSymmetry> elements = aut.elements();
    std::size_t base = elements.size();
    for (std::size_t k = 0; k < base; ++k) {
        SignedSymmetry flipped = elements[k];
        flipped.sign = -flipped.sign;
        elements.push_back(std::move(flipped));
    }
    return {m.size(), std::move(elements)};
}

std::vector<Int> act_on_vector(const SignedSymmetry& g, std::span<const Int> x) {
    if (x.size() != g.degree()) throw InvalidArgument("degree mismatch");
    std::vector<Int> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = g.sign * x[static_cast<std::size_t>(g.perm[i])];
    return out;
}

namespace {

// Signed labels of g V_c: position i carries sign * c[perm[i]].
std::vector<int> image_labels(const SignedSymmetry& g, const ColoringVector& c) {
    if (c.size() != g.degree()) throw InvalidArgument("degree mismatch between symmetry and coloring");
    std::vector<int> y(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) y[i] = g.sign * c[static_cast<std::size_t>(g.perm[i])];
    return y;
}

}  // namespace

ColoringVector act(const SignedSymmetry& g, const ColoringVector& c) { return canonicalize(image_labels(g, c)); }

bool fixes_pointwise(const SignedSymmetry& g, const ColoringVector& c) {
    auto y = image_labels(g, c);
    return std::equal(y.begin(), y.end(), c.entries().begin());
}

std::vector<Orbit> orbits(const SymmetryGroup& g, const std::vector<ColoringVector>& family) {
    std::unordered_map<ColoringVector, std::size_t, ColoringVectorHash> index;
    for (std::size_t a = 0; a < family.size(); ++a) index.emplace(family[a], a);

    std::vector<char> assigned(family.size(), 0);
    std::vector<Orbit> out;
    for (std::size_t a = 0; a < family.size(); ++a) {
        if (assigned[a]) continue;
        Orbit orbit{family[a], {}};
        for (const auto& h : g.elements()) {
            ColoringVector image = act(h, family[a]);
            auto it = index.find(image);
            if (it == index.end())
                throw InvalidArgument("family is not closed under the group: " + family[a].str() + " maps to " +
                                      image.str());
            if (assigned[it->second]) continue;
            assigned[it->second] = 1;
            orbit.members.push_back(it->second);
            orbit.representative = std::min(orbit.representative, image);
        }
        std::sort(orbit.members.begin(), orbit.members.end());
        out.push_back(std::move(orbit));
    }
    return out;
}

SymmetryGroup point_stabilizer(const SymmetryGroup& g, const ColoringVector& c) {
    std::vector<SignedSymmetry> kept;
    for (const auto& h : g.elements())
        if (fixes_pointwise(h, c)) kept.push_back(h);
    return {g.degree(), std::move(kept)};
}

namespace {

// Union-find over positions where each node stores its sign relative to the root.
class SignedUnionFind {
public:
    explicit SignedUnionFind(std::size_t n) : parent_(n), parity_(n, 1), zero_(n, 0) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    std::pair<std::size_t, int> find(std::size_t i) {
        if (parent_[i] == i) return {i, 1};
        auto [root, sign] = find(parent_[i]);
        parent_[i] = root;
        parity_[i] *= sign;
        return {root, parity_[i]};
    }

    // Records x_i = sign * x_j.
    void unite(std::size_t i, std::size_t j, int sign) {
        auto [ri, si] = find(i);
        auto [rj, sj] = find(j);
        if (ri == rj) {
            // x_i = si x_r and x_j = sj x_r, so x_r = si * sign * sj * x_r.
            if (si * sign * sj == -1) zero_[ri] = 1;
            return;
        }
        parent_[ri] = rj;
        parity_[ri] = si * sign * sj;  // x_ri = si x_i = si sign x_j = si sign sj x_rj
        zero_[rj] = zero_[rj] || zero_[ri];
    }

    bool zero(std::size_t root) const { return zero_[root] != 0; }

private:
    std::vector<std::size_t> parent_;
    std::vector<int> parity_;
    std::vector<char> zero_;
};

}  // namespace

ColoringVector fixed_subspace(std::size_t degree, const std::vector<SignedSymmetry>& elements) {
    SignedUnionFind uf(degree);
    for (const auto& g : elements) {
        if (g.degree() != degree) throw InvalidArgument("degree mismatch");
        for (std::size_t i = 0; i < degree; ++i) uf.unite(i, static_cast<std::size_t>(g.perm[i]), g.sign);
    }
    std::vector<int> labels(degree);
    for (std::size_t i = 0; i < degree; ++i) {
        auto [root, sign] = uf.find(i);
        labels[i] = uf.zero(root) ? 0 : sign * static_cast<int>(root + 1);
    }
    return canonicalize(labels);
}

ColoringVector fixed_subspace(const SymmetryGroup& h) { return fixed_subspace(h.degree(), h.elements()); }

AisReport classify_ais(const IntegerMatrix& m, const SymmetryGroup& g, const std::vector<ColoringVector>& family) {
    AisReport report;
    for (const auto& c : family) {
        SymmetryGroup stab = point_stabilizer(g, c);
        ColoringVector fix = fixed_subspace(stab);
        report.stabilizer_orders.push_back(stab.order());
        report.labels.push_back(fix == c ? AisLabel::fixed_point : AisLabel::ais);
        if (!is_invariant(m, fix))
            report.warnings.push_back("fixed space " + fix.str() + " of the stabilizer of " + c.str() +
                                      " is not invariant; the group may not commute with the matrix");
    }
    return report;
}

}  // namespace polydiag
