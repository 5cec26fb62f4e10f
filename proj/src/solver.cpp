#include "polydiag/solver.hpp"

#include <algorithm>
#include <exception>
#include <string>

#include <omp.h>

namespace polydiag {

EnumerationMode parse_mode(std::string_view name) {
    if (name == "polydiagonal") return EnumerationMode::polydiagonal;
    if (name == "synchrony") return EnumerationMode::synchrony;
    if (name == "anti-synchrony" || name == "anti_synchrony") return EnumerationMode::anti_synchrony;
    if (name == "colorings" || name == "all_colorings") return EnumerationMode::all_colorings;
    throw InvalidArgument("unknown mode '" + std::string(name) + "'");
}

std::string_view mode_name(EnumerationMode mode) {
    switch (mode) {
        case EnumerationMode::polydiagonal: return "polydiagonal";
        case EnumerationMode::synchrony: return "synchrony";
        case EnumerationMode::anti_synchrony: return "anti-synchrony";
        case EnumerationMode::all_colorings: return "colorings";
    }
    return "?";
}

namespace {

struct ColumnEntry {
    std::size_t row;
    Int value;
};

// Immutable data shared by every search over one matrix.
struct Model {
    std::size_t n;
    EnumerationMode mode;
    bool check_invariance;
    // Nonzeros of column j: the rows whose partial sums change when c[j] is assigned.
    std::vector<std::vector<ColumnEntry>> column;
    // Rows whose checks become decidable once position t is assigned:
    // the row's own position and every column with a nonzero in that row are set.
    std::vector<std::vector<std::size_t>> activated_at;

    Model(const IntegerMatrix& m, EnumerationMode md)
        : n(m.size()), mode(md), check_invariance(md != EnumerationMode::all_colorings), column(n), activated_at(n) {
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t ready = i;
            for (std::size_t j = 0; j < n; ++j) {
                if (m(i, j) == 0) continue;
                ready = std::max(ready, j);
                column[j].push_back({i, m(i, j)});
            }
            activated_at[ready].push_back(i);
        }
    }
};

class Search {
public:
    explicit Search(const Model& model)
        : model_(model),
          n_(model.n),
          stride_(model.n),
          c_(model.n, 0),
          prefix_max_(model.n + 1, 0),
          partial_(model.n * model.n, 0),
          rep_(2 * model.n + 1, kNone),
          reps_set_(model.n, 0) {}

    std::size_t depth() const { return depth_; }
    std::span<const int> prefix() const { return {c_.data(), depth_}; }

    // Inclusive value range for the next position.
    std::pair<int, int> domain() const {
        bool sync = model_.mode == EnumerationMode::synchrony;
        if (depth_ == 0) return {sync ? 1 : 0, 1};
        int m = prefix_max_[depth_];
        return {sync ? 1 : -m, 1 + m};
    }

    // Assigns the next position and runs every check that just became decidable.
    // On failure the state is restored and false is returned.
    bool push(int value) {
        std::size_t t = depth_;
        c_[t] = value;
        prefix_max_[t + 1] = t == 0 ? value : std::max(prefix_max_[t], value);
        ++depth_;
        if (!model_.check_invariance) return true;
        update_partials(t, value, +1);
        if (!check_activated(t)) {
            pop();
            return false;
        }
        return true;
    }

    void pop() {
        --depth_;
        std::size_t t = depth_;
        if (!model_.check_invariance) return;
        for (; reps_set_[t] > 0; --reps_set_[t]) {
            rep_[rep_undo_.back()] = kNone;
            rep_undo_.pop_back();
        }
        update_partials(t, c_[t], -1);
    }

    bool leaf_accepted() const {
        switch (model_.mode) {
            case EnumerationMode::anti_synchrony:
                return std::any_of(c_.begin(), c_.end(), [](int x) { return x <= 0; });
            default:
                return true;
        }
    }

    template <typename Visit>
    void dfs(std::size_t stop_depth, Visit& visit) {
        if (depth_ == stop_depth) {
            visit(*this);
            return;
        }
        auto [lo, hi] = domain();
        for (int v = lo; v <= hi; ++v) {
            if (!push(v)) continue;
            dfs(stop_depth, visit);
            pop();
        }
    }

private:
    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

    Int* row_partials(std::size_t i) { return partial_.data() + i * stride_; }

    // Colors >= n are only reachable by (1, ..., n), whose subspace is the whole space.
    void update_partials(std::size_t t, int value, int direction) {
        if (value == 0) return;
        std::size_t color = static_cast<std::size_t>(value < 0 ? -value : value);
        if (color >= n_) return;
        bool negate = (value < 0) != (direction < 0);
        for (const auto& e : model_.column[t]) {
            Int& slot = row_partials(e.row)[color];
            Int updated;
            bool overflow = negate ? __builtin_sub_overflow(slot, e.value, &updated)
                                   : __builtin_add_overflow(slot, e.value, &updated);
            if (overflow) throw OverflowError("partial sum of M*b");
            slot = updated;
        }
    }

    bool check_activated(std::size_t t) {
        std::size_t colors = static_cast<std::size_t>(std::max(prefix_max_[t + 1], 0));
        colors = std::min(colors, n_ - 1);
        for (std::size_t row : model_.activated_at[t]) {
            const Int* w = row_partials(row);
            int value = c_[row];
            if (value == 0) {
                for (std::size_t k = 1; k <= colors; ++k)
                    if (w[k] != 0) return false;
                continue;
            }
            std::size_t same = rep_[slot(value)];
            if (same != kNone) {
                const Int* u = row_partials(same);
                for (std::size_t k = 1; k <= colors; ++k)
                    if (w[k] != u[k]) return false;
                continue;
            }
            std::size_t opposite = rep_[slot(-value)];
            if (opposite != kNone) {
                const Int* u = row_partials(opposite);
                for (std::size_t k = 1; k <= colors; ++k)
                    if (w[k] != -u[k]) return false;
            }
            rep_[slot(value)] = row;
            rep_undo_.push_back(slot(value));
            ++reps_set_[t];
        }
        return true;
    }

    std::size_t slot(int value) const { return static_cast<std::size_t>(value + static_cast<int>(n_)); }

    const Model& model_;
    std::size_t n_;
    std::size_t stride_;
    std::size_t depth_ = 0;
    std::vector<int> c_;
    std::vector<int> prefix_max_;  // prefix_max_[t] = max(c[0..t-1])
    std::vector<Int> partial_;     // partial_[i * n + k] = sum over assigned j of M[i][j] * b_k[j]
    // rep_[value + n]: first activated row with that color value.
    std::vector<std::size_t> rep_;
    std::vector<std::size_t> rep_undo_;
    std::vector<std::size_t> reps_set_;  // per depth, entries pushed onto rep_undo_
};

void check_matrix(const IntegerMatrix& m) {
    if (m.size() == 0) throw InvalidArgument("matrix must be nonempty");
}

}  // namespace

void enumerate_serial(const IntegerMatrix& m, EnumerationMode mode, const SolutionSink& sink) {
    check_matrix(m);
    Model model(m, mode);
    Search search(model);
    auto emit = [&](Search& s) {
        if (s.leaf_accepted()) sink(s.prefix());
    };
    search.dfs(model.n, emit);
}

void enumerate_parallel(const IntegerMatrix& m, EnumerationMode mode, const SolveConfig& config,
                        const SolutionSink& sink) {
    check_matrix(m);
    Model model(m, mode);
    std::size_t split = std::min(std::max<std::size_t>(config.split_depth, 1), model.n);

    std::vector<std::vector<int>> prefixes;
    {
        Search search(model);
        auto collect = [&](Search& s) { prefixes.emplace_back(s.prefix().begin(), s.prefix().end()); };
        search.dfs(split, collect);
    }

    std::exception_ptr failure;
    const auto tasks = static_cast<std::ptrdiff_t>(prefixes.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(config.threads, 1))
    for (std::ptrdiff_t task = 0; task < tasks; ++task) {
        bool abandoned = false;
#pragma omp critical(polydiag_failure)
        abandoned = failure != nullptr;
        if (abandoned) continue;
        try {
            Search search(model);
            for (int v : prefixes[static_cast<std::size_t>(task)]) search.push(v);
            auto emit = [&](Search& s) {
                if (!s.leaf_accepted()) return;
#pragma omp critical(polydiag_sink)
                sink(s.prefix());
            };
            search.dfs(model.n, emit);
        } catch (...) {
#pragma omp critical(polydiag_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
}

void enumerate(const IntegerMatrix& m, EnumerationMode mode, const SolveConfig& config, const SolutionSink& sink) {
    if (config.threads <= 1)
        enumerate_serial(m, mode, sink);
    else
        enumerate_parallel(m, mode, config, sink);
}

std::vector<ColoringVector> enumerate_all(const IntegerMatrix& m, EnumerationMode mode, const SolveConfig& config) {
    std::vector<ColoringVector> out;
    enumerate(m, mode, config, [&](std::span<const int> c) {
        out.push_back(ColoringVector::trusted({c.begin(), c.end()}));
    });
    return out;
}

std::uint64_t count(const IntegerMatrix& m, EnumerationMode mode, const SolveConfig& config) {
    std::uint64_t total = 0;
    enumerate(m, mode, config, [&](std::span<const int>) { ++total; });
    return total;
}

void enumerate_colorings(std::size_t n, const SolutionSink& sink) {
    enumerate_serial(IntegerMatrix(n), EnumerationMode::all_colorings, sink);
}

std::vector<ColoringVector> brute_force_invariant(const IntegerMatrix& m, std::size_t cap) {
    std::size_t n = m.size();
    if (n > cap)
        throw InvalidArgument("brute-force oracle refuses n = " + std::to_string(n) + " (cap " + std::to_string(cap) +
                              ")");
    std::vector<ColoringVector> out;
    // Odometer over the box -i <= c[i] <= i + 1 (0-based); every coloring lies inside it.
    std::vector<int> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = -static_cast<int>(i);
    while (true) {
        if (validate_coloring(c)) {
            auto cv = ColoringVector::trusted(c);
            if (is_invariant(m, cv)) out.push_back(std::move(cv));
        }
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (c[i] < static_cast<int>(i) + 1) {
                ++c[i];
                break;
            }
            c[i] = -static_cast<int>(i);
            if (i == 0) return out;
        }
    }
}

}  // namespace polydiag
