#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "polydiag/graphs.hpp"
#include "polydiag/solver.hpp"

using namespace polydiag;

namespace {

struct Case {
    std::string name;
    IntegerMatrix matrix;
    EnumerationMode mode;
};

double seconds(const std::function<std::uint64_t()>& f, std::uint64_t& result) {
    auto start = std::chrono::steady_clock::now();
    result = f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    int threads = argc > 1 ? std::stoi(argv[1]) : omp_get_max_threads();
    std::size_t depth = argc > 2 ? std::stoul(argv[2]) : 4;

    std::vector<Case> cases{
        {"colorings n=8", IntegerMatrix(8), EnumerationMode::all_colorings},
        {"colorings n=9", IntegerMatrix(9), EnumerationMode::all_colorings},
        {"Petersen adjacency", graphs::adjacency(10, graphs::petersen()), EnumerationMode::polydiagonal},
        {"C30 Laplacian", graphs::laplacian(30, graphs::cycle(30)), EnumerationMode::polydiagonal},
        {"C50 Laplacian", graphs::laplacian(50, graphs::cycle(50)), EnumerationMode::polydiagonal},
        {"P100 Laplacian", graphs::laplacian(100, graphs::path(100)), EnumerationMode::polydiagonal},
    };

    std::printf("threads=%d split-depth=%zu\n", threads, depth);
    std::printf("%-22s %12s %10s %10s %8s\n", "case", "count", "serial s", "omp s", "speedup");
    bool agree = true;
    for (const auto& c : cases) {
        std::uint64_t serial_count = 0, parallel_count = 0;
        double ts = seconds([&] { return count(c.matrix, c.mode); }, serial_count);
        double tp = seconds([&] { return count(c.matrix, c.mode, SolveConfig{threads, depth}); }, parallel_count);
        agree = agree && serial_count == parallel_count;
        std::printf("%-22s %12llu %10.3f %10.3f %8.2f%s\n", c.name.c_str(),
                    static_cast<unsigned long long>(serial_count), ts, tp, tp > 0 ? ts / tp : 0.0,
                    serial_count == parallel_count ? "" : "  MISMATCH");
    }
    return agree ? 0 : 1;
}
