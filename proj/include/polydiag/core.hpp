#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "polydiag/integer.hpp"

// Positions and matrix indices are 0-based in the API; user-facing text
// (CLI output, error messages naming positions) is 1-based.

namespace polydiag {

/// Square matrix of exact integers, n >= 1, stored row-major.
class IntegerMatrix {
public:
    explicit IntegerMatrix(std::size_t n);
    explicit IntegerMatrix(const std::vector<std::vector<Int>>& rows);

    std::size_t size() const { return n_; }
    Int& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    Int operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
    std::span<const Int> row(std::size_t i) const { return {data_.data() + i * n_, n_}; }

    static IntegerMatrix identity(std::size_t n);
    IntegerMatrix scaled(Int factor) const;

    friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

private:
    std::size_t n_;
    std::vector<Int> data_;
};

/// Rows x cols matrix of exact rationals.
class RationalMatrix {
public:
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_integer() const;

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> data_;
};

/// Canonical integer encoding of a tagged partition of {0, ..., n-1}.
///
/// c[0] is 0 or 1 and every later entry satisfies -m <= c[i] <= 1 + m where m
/// is the maximum of the preceding entries. Equal entries share a class,
/// opposite entries are paired classes, and the zero entries form the
/// self-paired class.
class ColoringVector {
public:
    /// Throws InvalidArgument unless `entries` is a coloring vector.
    explicit ColoringVector(std::vector<int> entries);

    /// Skips validation; for producers that construct canonical vectors by design.
    static ColoringVector trusted(std::vector<int> entries);

    std::size_t size() const { return entries_.size(); }
    int operator[](std::size_t i) const { return entries_[i]; }
    std::span<const int> entries() const { return entries_; }
    const std::vector<int>& vec() const { return entries_; }

    /// Largest entry, i.e. the number of basis vectors of the subspace.
    int max_color() const;

    static ColoringVector full(std::size_t n);   // (1, 2, ..., n)
    static ColoringVector zero(std::size_t n);   // (0, ..., 0)
    static ColoringVector constant(std::size_t n);  // (1, ..., 1)

    friend auto operator<=>(const ColoringVector&, const ColoringVector&) = default;
    friend bool operator==(const ColoringVector&, const ColoringVector&) = default;

    std::string str() const;  // "(1,0,-1)"

private:
    struct TrustedTag {};
    ColoringVector(std::vector<int> entries, TrustedTag) : entries_(std::move(entries)) {}
    std::vector<int> entries_;
};

struct ColoringVectorHash {
    std::size_t operator()(const ColoringVector& c) const noexcept;
};

/// Partition of {0..n-1} with a partial involution on its classes.
struct TaggedPartition {
    std::vector<std::vector<int>> classes;
    /// partner[a] is the class paired with class a, or nullopt.
    std::vector<std::optional<std::size_t>> partner;

    /// Throws InvalidArgument on overlapping/missing indices, a non-involutive
    /// pairing, or more than one self-paired class.
    void validate(std::size_t n) const;
};

/// n x d matrix over {-1, 0, 1} whose columns span a polydiagonal subspace.
class BasisMatrix {
public:
    /// Validates: one nonzero per row at most, transpose in reduced row-echelon
    /// form, no zero column.
    BasisMatrix(std::size_t n, std::size_t d, std::vector<int> row_major);

    std::size_t rows() const { return n_; }
    std::size_t cols() const { return d_; }
    int operator()(std::size_t i, std::size_t k) const { return data_[i * d_ + k]; }
    std::vector<int> column(std::size_t k) const;

    friend bool operator==(const BasisMatrix&, const BasisMatrix&) = default;

private:
    std::size_t n_;
    std::size_t d_;
    std::vector<int> data_;
};

/// Definition-based test: c[0] in {0,1} and -m <= c[i] <= 1 + m.
bool validate_coloring(std::span<const int> v);

/// Alternative characterization without running maxima: bounds -i <= c[i] <= i+1
/// (0-based), each c[i] <= 1 + c[j] for some earlier j, and negative entries
/// must negate an earlier entry.
bool validate_coloring_alt(std::span<const int> v);

TaggedPartition coloring_to_partition(const ColoringVector& c);
ColoringVector partition_to_coloring(const TaggedPartition& p, std::size_t n);

/// Relabels an arbitrary signed labeling (equal labels share a class, opposite
/// labels are paired, 0 is the zero class) into its canonical coloring vector.
ColoringVector canonicalize(std::span<const Int> labels);
ColoringVector canonicalize(std::span<const int> labels);

int signed_delta(int i, int j);

BasisMatrix basis_of(const ColoringVector& c);
ColoringVector coloring_from_basis(const BasisMatrix& d);

/// {|c_i|}; includes 0 when c has zero entries.
std::set<int> colors_of(const ColoringVector& c);
/// Number of nonzero colors.
std::size_t dimension(const ColoringVector& c);

bool is_synchrony(const ColoringVector& c);
bool is_evenly_tagged(const ColoringVector& c);

/// Whether v lies in the polydiagonal subspace of c.
bool membership(const ColoringVector& c, std::span<const Rational> v);

/// Pairwise order test; `lhs` must be a coloring vector of the same length as `rhs`,
/// `rhs` may be any integer vector. lhs <= rhs means the subspace of rhs is
/// contained in that of lhs (when rhs is itself a coloring vector).
bool leq_extended(std::span<const int> lhs, std::span<const Int> rhs);
bool leq_extended(const ColoringVector& lhs, const ColoringVector& rhs);

/// M * b for a signed indicator vector b.
std::vector<Int> apply(const IntegerMatrix& m, std::span<const int> b);

/// Whether the polydiagonal subspace of c is invariant under m.
bool is_invariant(const IntegerMatrix& m, const ColoringVector& c);

}  // namespace polydiag

template <>
struct std::hash<polydiag::ColoringVector> : polydiag::ColoringVectorHash {};
