#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "polydiag/core.hpp"

namespace polydiag {

/// (perm, sign) acting on R^n by (g x)_i = sign * x_{perm[i]}.
struct SignedSymmetry {
    std::vector<int> perm;
    int sign = 1;

    static SignedSymmetry identity(std::size_t n);
    static SignedSymmetry negation(std::size_t n);
    std::size_t degree() const { return perm.size(); }
    bool is_identity() const;
    /// Throws InvalidArgument unless perm is a bijection and sign is +-1.
    void validate() const;
    SignedSymmetry inverse() const;

    /// Product defined so that act(g * h, x) == act(g, act(h, x)).
    friend SignedSymmetry operator*(const SignedSymmetry& g, const SignedSymmetry& h);
    friend auto operator<=>(const SignedSymmetry&, const SignedSymmetry&) = default;
    friend bool operator==(const SignedSymmetry&, const SignedSymmetry&) = default;
};

struct SignedSymmetryHash {
    std::size_t operator()(const SignedSymmetry& g) const noexcept;
};

/// Explicit element list of a finite group of signed symmetries, sorted.
class SymmetryGroup {
public:
    SymmetryGroup(std::size_t degree, std::vector<SignedSymmetry> elements);

    std::size_t degree() const { return degree_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<SignedSymmetry>& elements() const { return elements_; }
    bool contains(const SignedSymmetry& g) const;
    /// Closure under products and inverses, with identity present.
    bool is_group() const;

private:
    std::size_t degree_;
    std::vector<SignedSymmetry> elements_;
};

/// Smallest group containing the generators. `cap` bounds the group order.
SymmetryGroup group_closure(std::size_t degree, const std::vector<SignedSymmetry>& generators,
                            std::size_t cap = 1'000'000);

/// Permutations with m(p[i], p[j]) == m(i, j), all with sign +1. For a graph
/// adjacency or Laplacian matrix this is the automorphism group of the graph.
SymmetryGroup graph_automorphisms(const IntegerMatrix& m, std::size_t cap = 16);

/// Aut(M) x {+-1}, or Aut(M) alone when `with_sign_flip` is false.
SymmetryGroup signed_symmetry_group(const IntegerMatrix& m, bool with_sign_flip = true, std::size_t cap = 16);

/// x -> g x applied to a vector.
std::vector<Int> act_on_vector(const SignedSymmetry& g, std::span<const Int> x);

/// Canonical coloring vector of the image subspace g V_c.
ColoringVector act(const SignedSymmetry& g, const ColoringVector& c);

/// Whether g fixes every vector of V_c.
bool fixes_pointwise(const SignedSymmetry& g, const ColoringVector& c);

struct Orbit {
    ColoringVector representative;  // lexicographically smallest member
    std::vector<std::size_t> members;  // indices into the family
};

/// Orbits of the family under the group; throws if some image leaves the family.
std::vector<Orbit> orbits(const SymmetryGroup& g, const std::vector<ColoringVector>& family);

SymmetryGroup point_stabilizer(const SymmetryGroup& g, const ColoringVector& c);

/// Coloring of the common fixed space {x | h x = x for all h in H}.
ColoringVector fixed_subspace(const SymmetryGroup& h);
ColoringVector fixed_subspace(std::size_t degree, const std::vector<SignedSymmetry>& elements);

enum class AisLabel { fixed_point, ais };

struct AisReport {
    std::vector<AisLabel> labels;          // parallel to the family
    std::vector<std::size_t> stabilizer_orders;
    std::vector<std::string> warnings;
};

/// A member is AIS when the fixed space of its point stabilizer differs from it.
AisReport classify_ais(const IntegerMatrix& m, const SymmetryGroup& g, const std::vector<ColoringVector>& family);

}  // namespace polydiag
