#pragma once

#include <vector>

#include "polydiag/core.hpp"

// Split-and-cir baseline for invariant synchrony subspaces.

namespace polydiag {

/// Untagged partition of {0..n-1}, stored as its canonical (all-positive) coloring.
class Partition {
public:
    /// Any labeling; equal labels share a class. Relabeled canonically.
    explicit Partition(std::span<const int> labels);
    static Partition from_classes(const std::vector<std::vector<int>>& classes, std::size_t n);
    static Partition single_class(std::size_t n);

    std::size_t size() const { return labels_.size(); }
    std::size_t class_count() const { return class_count_; }
    /// Class index (0-based, ordered by minimum element) of position i.
    int class_of(std::size_t i) const { return labels_[i] - 1; }
    std::vector<std::vector<int>> classes() const;
    ColoringVector coloring() const { return ColoringVector::trusted(labels_); }

    /// Whether every class of *this lies inside a class of `coarser`.
    bool refines(const Partition& coarser) const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> labels_;
    std::size_t class_count_ = 0;
};

enum class RefinementOrder {
    sequential,    // split one class at a time against the latest partition
    simultaneous,  // split all classes against the previous round's partition
};

/// Sum of row i of m over each class of p.
std::vector<Int> signature(const IntegerMatrix& m, std::size_t i, const Partition& p);

/// Coarsest refinement of p whose synchrony subspace is invariant under m.
Partition cir(const IntegerMatrix& m, const Partition& p, RefinementOrder order = RefinementOrder::sequential);

/// Every partition whose synchrony subspace is invariant under m, in discovery order.
std::vector<Partition> split_and_cir(const IntegerMatrix& m, RefinementOrder order = RefinementOrder::sequential);

}  // namespace polydiag
