#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "polydiag/core.hpp"

namespace polydiag {

enum class EnumerationMode {
    polydiagonal,    // every invariant polydiagonal subspace
    synchrony,       // invariant subspaces whose coloring has only positive entries
    anti_synchrony,  // invariant subspaces with at least one entry <= 0
    all_colorings,   // every coloring vector; the matrix is ignored
};

EnumerationMode parse_mode(std::string_view name);
std::string_view mode_name(EnumerationMode mode);

struct SolveConfig {
    /// 1 selects the serial search; larger values run subtrees on OpenMP threads.
    int threads = 1;
    /// Prefix length at which the parallel search splits the tree into tasks.
    std::size_t split_depth = 4;
};

/// Receives each solution as it is found. The span is only valid during the call.
/// In parallel mode calls are serialized but arrive in unspecified order.
using SolutionSink = std::function<void(std::span<const int>)>;

/// Streams every coloring vector of an invariant subspace of `m` (filtered by
/// `mode`) exactly once. Serial order is lexicographic DFS order with values
/// tried ascending.
void enumerate(const IntegerMatrix& m, EnumerationMode mode, const SolveConfig& config, const SolutionSink& sink);

/// Serial reference search.
void enumerate_serial(const IntegerMatrix& m, EnumerationMode mode, const SolutionSink& sink);

/// OpenMP search over independent subtrees rooted at depth `split_depth`.
void enumerate_parallel(const IntegerMatrix& m, EnumerationMode mode, const SolveConfig& config,
                        const SolutionSink& sink);

std::vector<ColoringVector> enumerate_all(const IntegerMatrix& m, EnumerationMode mode,
                                          const SolveConfig& config = {});

std::uint64_t count(const IntegerMatrix& m, EnumerationMode mode, const SolveConfig& config = {});

/// Every coloring vector of length n (the Dowling number of them).
void enumerate_colorings(std::size_t n, const SolutionSink& sink);

/// Generate-and-test oracle: all candidates within the coarse per-position bounds,
/// filtered by validate_coloring and is_invariant. Refuses n > cap.
std::vector<ColoringVector> brute_force_invariant(const IntegerMatrix& m, std::size_t cap = 7);

}  // namespace polydiag
