#include "polydiag/core.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace polydiag {

// ---------------------------------------------------------------------------
// Matrices

IntegerMatrix::IntegerMatrix(std::size_t n) : n_(n), data_(n * n, 0) {
    if (n == 0) throw InvalidArgument("matrix must have at least one row");
}

IntegerMatrix::IntegerMatrix(const std::vector<std::vector<Int>>& rows) : IntegerMatrix(rows.size()) {
    for (std::size_t i = 0; i < n_; ++i) {
        if (rows[i].size() != n_)
            throw InvalidArgument("matrix is not square: row " + std::to_string(i + 1) + " has " +
                                  std::to_string(rows[i].size()) + " entries, expected " + std::to_string(n_));
        std::copy(rows[i].begin(), rows[i].end(), data_.begin() + static_cast<std::ptrdiff_t>(i * n_));
    }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::scaled(Int factor) const {
    IntegerMatrix out(n_);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = checked_mul(data_[k], factor);
    return out;
}

bool RationalMatrix::is_integer() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& r) { return r.is_integer(); });
}

// ---------------------------------------------------------------------------
// Coloring vectors

bool validate_coloring(std::span<const int> v) {
    if (v.empty()) throw InvalidArgument("coloring vector must be nonempty");
    if (v[0] != 0 && v[0] != 1) return false;
    int running_max = v[0];
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i] < -running_max || v[i] > 1 + running_max) return false;
        running_max = std::max(running_max, v[i]);
    }
    return true;
}

bool validate_coloring_alt(std::span<const int> v) {
    if (v.empty()) throw InvalidArgument("coloring vector must be nonempty");
    for (std::size_t i = 0; i < v.size(); ++i) {
        long pos = static_cast<long>(i) + 1;  // 1-based index
        if (v[i] < -pos + 1 || v[i] > pos) return false;
        if (i == 0) continue;
        bool bounded = false;
        bool sign_ok = v[i] >= 0;
        for (std::size_t j = 0; j < i; ++j) {
            bounded = bounded || v[i] <= 1 + v[j];
            sign_ok = sign_ok || v[i] == -v[j];
        }
        if (!bounded || !sign_ok) return false;
    }
    return true;
}

ColoringVector::ColoringVector(std::vector<int> entries) : entries_(std::move(entries)) {
    if (!validate_coloring(entries_)) throw InvalidArgument("not a coloring vector: " + str());
}

ColoringVector ColoringVector::trusted(std::vector<int> entries) { return {std::move(entries), TrustedTag{}}; }

int ColoringVector::max_color() const { return *std::max_element(entries_.begin(), entries_.end()); }

ColoringVector ColoringVector::full(std::size_t n) {
    std::vector<int> e(n);
    std::iota(e.begin(), e.end(), 1);
    return trusted(std::move(e));
}

ColoringVector ColoringVector::zero(std::size_t n) { return trusted(std::vector<int>(n, 0)); }

ColoringVector ColoringVector::constant(std::size_t n) { return trusted(std::vector<int>(n, 1)); }

std::string ColoringVector::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(entries_[i]);
    }
    return out + ")";
}

std::size_t ColoringVectorHash::operator()(const ColoringVector& c) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (int x : c.entries()) {
        h ^= static_cast<std::size_t>(x + 0x9e3779b9);
        h *= 1099511628211ULL;
    }
    return h;
}

// ---------------------------------------------------------------------------
// Tagged partitions

void TaggedPartition::validate(std::size_t n) const {
    if (partner.size() != classes.size()) throw InvalidArgument("partner table size differs from class count");
    std::vector<char> seen(n, 0);
    for (const auto& cls : classes) {
        if (cls.empty()) throw InvalidArgument("empty class in partition");
        for (int i : cls) {
            if (i < 0 || static_cast<std::size_t>(i) >= n)
                throw InvalidArgument("index " + std::to_string(i + 1) + " out of range");
            if (seen[static_cast<std::size_t>(i)]) throw InvalidArgument("index " + std::to_string(i + 1) + " appears twice");
            seen[static_cast<std::size_t>(i)] = 1;
        }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) throw InvalidArgument("partition does not cover all indices");
    int fixed = 0;
    for (std::size_t a = 0; a < classes.size(); ++a) {
        if (!partner[a]) continue;
        std::size_t b = *partner[a];
        if (b >= classes.size()) throw InvalidArgument("partner index out of range");
        if (partner[b] != a) throw InvalidArgument("pairing is not an involution");
        if (b == a) ++fixed;
    }
    if (fixed > 1) throw InvalidArgument("more than one self-paired class");
}

TaggedPartition coloring_to_partition(const ColoringVector& c) {
    TaggedPartition p;
    std::map<int, std::size_t> class_of;  // color value -> class index
    for (std::size_t i = 0; i < c.size(); ++i) {
        auto [it, inserted] = class_of.try_emplace(c[i], p.classes.size());
        if (inserted) p.classes.emplace_back();
        p.classes[it->second].push_back(static_cast<int>(i));
    }
    p.partner.assign(p.classes.size(), std::nullopt);
    for (auto [value, idx] : class_of) {
        auto it = class_of.find(-value);
        if (it != class_of.end()) p.partner[idx] = it->second;
    }
    return p;
}

ColoringVector partition_to_coloring(const TaggedPartition& p, std::size_t n) {
    p.validate(n);
    std::vector<int> mins(p.classes.size());
    for (std::size_t a = 0; a < p.classes.size(); ++a) mins[a] = *std::min_element(p.classes[a].begin(), p.classes[a].end());

    // Q: classes whose partner has a minimum no larger than their own (includes the fixed class).
    std::vector<char> in_q(p.classes.size(), 0);
    for (std::size_t a = 0; a < p.classes.size(); ++a)
        if (p.partner[a] && mins[*p.partner[a]] <= mins[a]) in_q[a] = 1;

    std::vector<std::size_t> order;
    for (std::size_t a = 0; a < p.classes.size(); ++a)
        if (!in_q[a]) order.push_back(a);
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return mins[x] < mins[y]; });

    std::vector<int> label(p.classes.size(), 0);  // fixed class keeps label 0
    for (std::size_t k = 0; k < order.size(); ++k) {
        std::size_t a = order[k];
        label[a] = static_cast<int>(k) + 1;
        if (p.partner[a]) label[*p.partner[a]] = -label[a];
    }

    std::vector<int> c(n);
    for (std::size_t a = 0; a < p.classes.size(); ++a)
        for (int i : p.classes[a]) c[static_cast<std::size_t>(i)] = label[a];
    return ColoringVector::trusted(std::move(c));
}

namespace {

template <typename T>
ColoringVector canonicalize_impl(std::span<const T> labels) {
    // Maps |label| to (canonical color, sign of its first occurrence).
    std::map<T, std::pair<int, int>> assigned;
    std::vector<int> c(labels.size());
    int next = 1;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        T x = labels[i];
        if (x == 0) continue;
        int sign = x > 0 ? 1 : -1;
        T key = x > 0 ? x : -x;
        auto [it, inserted] = assigned.try_emplace(key, next, sign);
        if (inserted) ++next;
        c[i] = it->second.first * it->second.second * sign;
    }
    return ColoringVector::trusted(std::move(c));
}

}  // namespace

ColoringVector canonicalize(std::span<const Int> labels) { return canonicalize_impl(labels); }
ColoringVector canonicalize(std::span<const int> labels) { return canonicalize_impl(labels); }

int signed_delta(int i, int j) {
    if (i == j) return 1;
    if (i == -j) return -1;
    return 0;
}

// ---------------------------------------------------------------------------
// Bases

BasisMatrix::BasisMatrix(std::size_t n, std::size_t d, std::vector<int> row_major)
    : n_(n), d_(d), data_(std::move(row_major)) {
    if (data_.size() != n * d) throw InvalidArgument("basis matrix data has wrong size");
    std::vector<std::size_t> leading(d, n);  // first nonzero row of each column
    for (std::size_t i = 0; i < n; ++i) {
        int nonzeros = 0;
        for (std::size_t k = 0; k < d; ++k) {
            int x = data_[i * d + k];
            if (x < -1 || x > 1) throw InvalidArgument("basis matrix entries must be in {-1,0,1}");
            if (x != 0) {
                ++nonzeros;
                if (leading[k] == n) {
                    if (x != 1) throw InvalidArgument("leading entry of a basis column must be 1");
                    leading[k] = i;
                }
            }
        }
        if (nonzeros > 1) throw InvalidArgument("basis matrix row " + std::to_string(i + 1) + " has several nonzeros");
    }
    for (std::size_t k = 0; k < d; ++k) {
        if (leading[k] == n) throw InvalidArgument("basis matrix has a zero column");
        if (k > 0 && leading[k] <= leading[k - 1]) throw InvalidArgument("basis transpose is not in row-echelon form");
    }
}

std::vector<int> BasisMatrix::column(std::size_t k) const {
    std::vector<int> col(n_);
    for (std::size_t i = 0; i < n_; ++i) col[i] = (*this)(i, k);
    return col;
}

BasisMatrix basis_of(const ColoringVector& c) {
    std::size_t n = c.size();
    std::size_t d = dimension(c);
    std::vector<int> data(n * d, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 1; k <= d; ++k) data[i * d + (k - 1)] = signed_delta(static_cast<int>(k), c[i]);
    }
    return {n, d, std::move(data)};
}

ColoringVector coloring_from_basis(const BasisMatrix& d) {
    std::vector<int> c(d.rows(), 0);
    for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t k = 0; k < d.cols(); ++k) c[i] += d(i, k) * static_cast<int>(k + 1);
    return ColoringVector(std::move(c));
}

std::set<int> colors_of(const ColoringVector& c) {
    std::set<int> out;
    for (int x : c.entries()) out.insert(x < 0 ? -x : x);
    return out;
}

std::size_t dimension(const ColoringVector& c) {
    int m = c.max_color();
    return m > 0 ? static_cast<std::size_t>(m) : 0;
}

bool is_synchrony(const ColoringVector& c) {
    return std::all_of(c.entries().begin(), c.entries().end(), [](int x) { return x >= 1; });
}

bool is_evenly_tagged(const ColoringVector& c) {
    std::vector<int> column_sum(dimension(c) + 1, 0);
    for (int x : c.entries()) {
        if (x > 0) ++column_sum[static_cast<std::size_t>(x)];
        if (x < 0) --column_sum[static_cast<std::size_t>(-x)];
    }
    return std::all_of(column_sum.begin() + 1, column_sum.end(), [](int s) { return s == 0; });
}

bool membership(const ColoringVector& c, std::span<const Rational> v) {
    if (v.size() != c.size()) throw InvalidArgument("vector length differs from coloring length");
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0 && v[i] != Rational(0)) return false;
        for (std::size_t j = 0; j < c.size(); ++j) {
            if (i == j) continue;
            if (c[i] == c[j] && v[i] != v[j]) return false;
            if (c[i] == -c[j] && v[i] != -v[j]) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Order and invariance

bool leq_extended(std::span<const int> lhs, std::span<const Int> rhs) {
    if (lhs.size() != rhs.size()) throw InvalidArgument("length mismatch in order comparison");
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        if (lhs[i] == 0 && rhs[i] != 0) return false;
        for (std::size_t j = i + 1; j < lhs.size(); ++j) {
            if (lhs[i] == lhs[j] && rhs[i] != rhs[j]) return false;
            if (lhs[i] == -lhs[j] && rhs[i] != -rhs[j]) return false;
        }
    }
    return true;
}

bool leq_extended(const ColoringVector& lhs, const ColoringVector& rhs) {
    std::vector<Int> wide(rhs.entries().begin(), rhs.entries().end());
    return leq_extended(lhs.entries(), wide);
}

std::vector<Int> apply(const IntegerMatrix& m, std::span<const int> b) {
    if (b.size() != m.size()) throw InvalidArgument("dimension mismatch between matrix and vector");
    std::vector<Int> w(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
        Int acc = 0;
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (b[j] == 1) acc = checked_add(acc, m(i, j));
            else if (b[j] == -1) acc = checked_sub(acc, m(i, j));
        }
        w[i] = acc;
    }
    return w;
}

bool is_invariant(const IntegerMatrix& m, const ColoringVector& c) {
    std::size_t n = m.size();
    if (c.size() != n) throw InvalidArgument("coloring length differs from matrix size");
    std::vector<int> b(n);
    for (std::size_t k = 1; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) b[i] = signed_delta(static_cast<int>(k), c[i]);
        if (!leq_extended(c.entries(), polydiag::apply(m, b))) return false;
    }
    return true;
}

}  // namespace polydiag
