#include "doctest.h"

#include "polydiag/ciralg.hpp"
#include "polydiag/graphs.hpp"
#include "polydiag/solver.hpp"
#include "test_support.hpp"

using namespace polydiag;
using namespace polydiag::testing;

namespace {

std::set<ColoringVector> colorings(const std::vector<Partition>& ps) {
    std::set<ColoringVector> out;
    for (const auto& p : ps) out.insert(p.coloring());
    return out;
}

Partition random_partition(std::mt19937& rng, std::size_t n) {
    std::vector<int> labels(n);
    std::uniform_int_distribution<int> dist(0, static_cast<int>(n) - 1);
    for (int& x : labels) x = dist(rng);
    return Partition(labels);
}

}  // namespace

TEST_CASE("signature sums a row over each class") {
    auto m = three_vertex_matrix();
    auto one = Partition::single_class(3);
    CHECK(signature(m, 0, one) == std::vector<Int>{1});
    CHECK(signature(m, 1, one) == std::vector<Int>{-1});
    Partition singles(std::vector<int>{1, 2, 3});
    for (std::size_t i = 0; i < 3; ++i) CHECK(signature(m, i, singles) == std::vector<Int>(m.row(i).begin(), m.row(i).end()));
}

TEST_CASE("cir examples") {
    auto m = three_vertex_matrix();
    CHECK(cir(m, Partition::single_class(3)).coloring() == cv({1, 2, 1}));
    Partition inv(std::vector<int>{1, 2, 1});
    CHECK(cir(m, inv) == inv);
    std::mt19937 rng(1);
    for (int t = 0; t < 20; ++t) {
        auto p = random_partition(rng, 6);
        CHECK(cir(IntegerMatrix(6), p) == p);
    }
}

TEST_CASE("partition helpers") {
    auto p = Partition::from_classes({{0, 3}, {1, 2}, {4}}, 5);
    CHECK(p.coloring() == cv({1, 2, 2, 1, 3}));
    CHECK(p.class_count() == 3);
    CHECK(p.classes() == std::vector<std::vector<int>>{{0, 3}, {1, 2}, {4}});
    CHECK(Partition(std::vector<int>{1, 2, 3, 1, 2}).refines(p) == false);
    CHECK(Partition(std::vector<int>{1, 2, 3, 4, 5}).refines(p));
    CHECK(p.refines(Partition::single_class(5)));
    CHECK_THROWS_AS(Partition::from_classes({{0}, {0, 1}}, 2), InvalidArgument);
}

TEST_CASE("cir is an idempotent invariant refinement, independent of order, and coarsest") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> size(1, 5);
    for (int trial = 0; trial < 150; ++trial) {
        std::size_t n = static_cast<std::size_t>(size(rng));
        auto m = random_matrix(rng, n, -2, 2);
        auto p = random_partition(rng, n);
        Partition q = cir(m, p);
        REQUIRE(q.refines(p));
        REQUIRE(is_invariant(m, q.coloring()));
        REQUIRE(cir(m, q) == q);
        REQUIRE(cir(m, p, RefinementOrder::simultaneous) == q);

        // Every invariant synchrony refinement of p refines q.
        auto target = p.coloring();
        std::size_t candidates = 0;
        for (const auto& c : brute_force_invariant(m)) {
            if (!is_synchrony(c) || !leq_extended(c, target)) continue;
            ++candidates;
            REQUIRE(leq_extended(c, q.coloring()));
        }
        REQUIRE(candidates >= 1);
    }
}

TEST_CASE("split_and_cir matches the synchrony enumeration") {
    auto m = three_vertex_matrix();
    CHECK(colorings(split_and_cir(m)) == std::set<ColoringVector>{cv({1, 2, 1}), cv({1, 2, 3})});
    CHECK(split_and_cir(graphs::laplacian(5, graphs::cycle(5))).size() == 7);
    CHECK(split_and_cir(IntegerMatrix(3)).size() == 5);

    std::mt19937 rng(8);
    for (int trial = 0; trial < 40; ++trial) {
        auto r = random_matrix(rng, 5, -2, 2);
        auto found = split_and_cir(r);
        auto set = colorings(found);
        REQUIRE(set.size() == found.size());  // each partition reported once
        REQUIRE(set == as_set(enumerate_all(r, EnumerationMode::synchrony)));
    }
}

TEST_CASE("split_and_cir gives the same family under either refinement order") {
    std::mt19937 rng(41);
    for (int t = 0; t < 15; ++t) {
        auto m = random_matrix(rng, 5, -2, 2);
        std::set<ColoringVector> seq, sim;
        for (const auto& p : split_and_cir(m, RefinementOrder::sequential)) seq.insert(p.coloring());
        for (const auto& p : split_and_cir(m, RefinementOrder::simultaneous)) sim.insert(p.coloring());
        REQUIRE(seq == sim);
    }
}
