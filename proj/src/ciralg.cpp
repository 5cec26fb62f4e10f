#include "polydiag/ciralg.hpp"

#include <deque>
#include <map>
#include <set>

namespace polydiag {

Partition::Partition(std::span<const int> labels) {
    if (labels.empty()) throw InvalidArgument("partition of an empty set");
    std::map<int, int> relabel;
    labels_.reserve(labels.size());
    for (int x : labels) {
        auto [it, inserted] = relabel.try_emplace(x, static_cast<int>(relabel.size()) + 1);
        labels_.push_back(it->second);
    }
    class_count_ = relabel.size();
}

Partition Partition::from_classes(const std::vector<std::vector<int>>& classes, std::size_t n) {
    TaggedPartition tp{classes, std::vector<std::optional<std::size_t>>(classes.size())};
    tp.validate(n);
    std::vector<int> labels(n);
    for (std::size_t a = 0; a < classes.size(); ++a)
        for (int i : classes[a]) labels[static_cast<std::size_t>(i)] = static_cast<int>(a);
    return Partition(labels);
}

Partition Partition::single_class(std::size_t n) { return Partition(std::vector<int>(n, 1)); }

std::vector<std::vector<int>> Partition::classes() const {
    std::vector<std::vector<int>> out(class_count_);
    for (std::size_t i = 0; i < labels_.size(); ++i) out[static_cast<std::size_t>(class_of(i))].push_back(static_cast<int>(i));
    return out;
}

bool Partition::refines(const Partition& coarser) const {
    if (coarser.size() != size()) return false;
    std::vector<int> image(class_count_, -1);
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        int& slot = image[static_cast<std::size_t>(class_of(i))];
        if (slot == -1) slot = coarser.class_of(i);
        else if (slot != coarser.class_of(i)) return false;
    }
    return true;
}

std::vector<Int> signature(const IntegerMatrix& m, std::size_t i, const Partition& p) {
    if (p.size() != m.size()) throw InvalidArgument("partition size differs from matrix size");
    std::vector<Int> sig(p.class_count(), 0);
    auto row = m.row(i);
    for (std::size_t j = 0; j < row.size(); ++j) {
        Int& s = sig[static_cast<std::size_t>(p.class_of(j))];
        s = checked_add(s, row[j]);
    }
    return sig;
}

namespace {

// Splits class `cls` of `labels` by signature relative to `reference`. New
// classes get fresh labels starting at `next_label`. Returns true if it split.
bool split_class(const IntegerMatrix& m, const std::vector<int>& members, const Partition& reference,
                 std::vector<int>& labels, int& next_label) {
    std::map<std::vector<Int>, int> groups;
    for (int i : members) {
        auto sig = signature(m, static_cast<std::size_t>(i), reference);
        auto [it, inserted] = groups.try_emplace(std::move(sig), groups.empty() ? labels[static_cast<std::size_t>(i)] : 0);
        if (inserted && it->second == 0) it->second = next_label++;
        labels[static_cast<std::size_t>(i)] = it->second;
    }
    return groups.size() > 1;
}

}  // namespace

Partition cir(const IntegerMatrix& m, const Partition& p, RefinementOrder order) {
    if (p.size() != m.size()) throw InvalidArgument("partition size differs from matrix size");
    Partition current = p;
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int> labels(current.coloring().vec());
        int next_label = static_cast<int>(current.class_count()) + 1;
        if (order == RefinementOrder::simultaneous) {
            for (const auto& members : current.classes())
                changed = split_class(m, members, current, labels, next_label) || changed;
            current = Partition(labels);
        } else {
            // Round-robin: after each split the later classes see the finer partition.
            for (std::size_t a = 0; a < current.class_count(); ++a) {
                auto members = current.classes()[a];
                if (split_class(m, members, current, labels, next_label)) {
                    changed = true;
                    current = Partition(labels);
                    break;
                }
            }
        }
    }
    return current;
}

std::vector<Partition> split_and_cir(const IntegerMatrix& m, RefinementOrder order) {
    std::size_t n = m.size();
    std::vector<Partition> found;
    std::set<std::vector<int>> found_keys;
    std::set<std::vector<int>> visited;
    std::deque<Partition> queue;

    Partition start = Partition::single_class(n);
    visited.insert(start.coloring().vec());
    queue.push_back(start);

    while (!queue.empty()) {
        Partition candidate = queue.front();
        queue.pop_front();
        Partition invariant = cir(m, candidate, order);
        if (!found_keys.insert(invariant.coloring().vec()).second) continue;
        found.push_back(invariant);

        std::vector<int> base = invariant.coloring().vec();
        int fresh = static_cast<int>(invariant.class_count()) + 1;
        for (const auto& members : invariant.classes()) {
            if (members.size() < 2) continue;
            // Unordered two-way splits: the first member stays put, every nonempty
            // proper subset of the rest moves to a new class.
            std::size_t rest = members.size() - 1;
            for (unsigned long long mask = 1; mask < (1ULL << rest); ++mask) {
                std::vector<int> labels = base;
                for (std::size_t b = 0; b < rest; ++b)
                    if (mask & (1ULL << b)) labels[static_cast<std::size_t>(members[b + 1])] = fresh;
                Partition split(labels);
                if (visited.insert(split.coloring().vec()).second) queue.push_back(std::move(split));
            }
        }
    }
    return found;
}

}  // namespace polydiag
