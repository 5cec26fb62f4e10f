#include "doctest.h"

#include <bitset>

#include "polydiag/core.hpp"
#include "test_support.hpp"

using namespace polydiag;
using namespace polydiag::testing;

namespace {

bool valid(std::vector<int> v) { return validate_coloring(v); }

// Independent invariance test: every basis image M b must itself lie in V_c.
bool invariant_by_images(const IntegerMatrix& m, const ColoringVector& c) {
    BasisMatrix d = basis_of(c);
    for (std::size_t k = 0; k < d.cols(); ++k) {
        auto w = polydiag::apply(m, d.column(k));
        std::vector<Rational> v(w.begin(), w.end());
        if (!membership(c, v)) return false;
    }
    return true;
}

// Pairwise conditions over k in the color set only, written out directly.
bool invariant_by_pairs(const IntegerMatrix& m, const ColoringVector& c) {
    std::size_t n = c.size();
    for (int k : colors_of(c)) {
        if (k == 0) continue;
        std::vector<int> b(n);
        for (std::size_t i = 0; i < n; ++i) b[i] = c[i] == k ? 1 : (c[i] == -k ? -1 : 0);
        std::vector<Int> w(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) w[i] += m(i, j) * b[j];
        for (std::size_t i = 0; i < n; ++i) {
            if (c[i] == 0 && w[i] != 0) return false;
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                if (c[i] == c[j] && w[i] != w[j]) return false;
                if (c[i] == -c[j] && w[i] != -w[j]) return false;
            }
        }
    }
    return true;
}

std::vector<Rational> rationals(std::vector<Int> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("validate_coloring examples") {
    CHECK(valid({1, 0, -1, 2, 1, 2}));
    CHECK(valid({0, 0, 1, 2, 3}));
    CHECK_FALSE(valid({1, -2, 1}));
    CHECK_FALSE(valid({1, 0, 3}));
    CHECK_FALSE(valid({0, 2, 1}));
    CHECK(valid({0}));
    CHECK(valid({1}));
    CHECK_THROWS_AS(validate_coloring(std::vector<int>{}), InvalidArgument);
    CHECK_THROWS_AS(ColoringVector({2, 1}), InvalidArgument);
}

TEST_CASE("both characterizations agree on random vectors") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> len(1, 8), entry(-8, 8);
    int agreed_valid = 0;
    for (int trial = 0; trial < 100000; ++trial) {
        std::vector<int> v(static_cast<std::size_t>(len(rng)));
        for (int& x : v) x = entry(rng);
        bool a = validate_coloring(v);
        REQUIRE(a == validate_coloring_alt(v));
        agreed_valid += a;
    }
    CHECK(agreed_valid > 0);
    // Exhaustive over a box that contains every coloring of length <= 5.
    for (std::size_t n = 1; n <= 5; ++n) {
        std::vector<int> v(n, -static_cast<int>(n));
        std::size_t hits = 0;
        while (true) {
            bool a = validate_coloring(v);
            REQUIRE(a == validate_coloring_alt(v));
            hits += a;
            std::size_t i = 0;
            while (i < n && v[i] == static_cast<int>(n)) v[i++] = -static_cast<int>(n);
            if (i == n) break;
            ++v[i];
        }
        CHECK(hits == colorings_by_definition(n).size());
    }
}

TEST_CASE("coloring_to_partition examples") {
    auto p = coloring_to_partition(cv({1, 0, 2, 1, -1}));
    REQUIRE(p.classes.size() == 4);
    CHECK(p.classes[0] == std::vector<int>{0, 3});
    CHECK(p.classes[1] == std::vector<int>{1});
    CHECK(p.classes[2] == std::vector<int>{2});
    CHECK(p.classes[3] == std::vector<int>{4});
    CHECK(p.partner[0] == 3u);
    CHECK(p.partner[3] == 0u);
    CHECK(p.partner[1] == 1u);
    CHECK_FALSE(p.partner[2].has_value());

    auto q = coloring_to_partition(cv({1, 2, 2, 1, 3}));
    REQUIRE(q.classes.size() == 3);
    CHECK(q.classes[1] == std::vector<int>{1, 2});
    for (const auto& x : q.partner) CHECK_FALSE(x.has_value());

    auto z = coloring_to_partition(cv({0, 0}));
    REQUIRE(z.classes.size() == 1);
    CHECK(z.partner[0] == 0u);
}

TEST_CASE("partition_to_coloring follows the labelling construction") {
    TaggedPartition p{{{0, 3}, {1}, {2}, {4}}, {3u, 1u, std::nullopt, 0u}};
    CHECK(partition_to_coloring(p, 5) == cv({1, 0, 2, 1, -1}));
    // Same partition with classes listed in another order.
    TaggedPartition p2{{{4}, {2}, {1}, {3, 0}}, {3u, std::nullopt, 2u, 0u}};
    CHECK(partition_to_coloring(p2, 5) == cv({1, 0, 2, 1, -1}));

    TaggedPartition s{{{0, 3}, {1, 2}, {4}}, {std::nullopt, std::nullopt, std::nullopt}};
    CHECK(partition_to_coloring(s, 5) == cv({1, 2, 2, 1, 3}));

    TaggedPartition id{{{0}, {1}, {2}}, {std::nullopt, std::nullopt, std::nullopt}};
    CHECK(partition_to_coloring(id, 3) == cv({1, 2, 3}));

    SUBCASE("malformed input") {
        TaggedPartition overlap{{{0, 1}, {1}}, {std::nullopt, std::nullopt}};
        CHECK_THROWS_AS(partition_to_coloring(overlap, 2), InvalidArgument);
        TaggedPartition not_involution{{{0}, {1}, {2}}, {1u, 2u, 0u}};
        CHECK_THROWS_AS(partition_to_coloring(not_involution, 3), InvalidArgument);
        TaggedPartition two_fixed{{{0}, {1}}, {0u, 1u}};
        CHECK_THROWS_AS(partition_to_coloring(two_fixed, 2), InvalidArgument);
        TaggedPartition missing{{{0}}, {std::nullopt}};
        CHECK_THROWS_AS(partition_to_coloring(missing, 2), InvalidArgument);
    }
}

TEST_CASE("partition round trip is exhaustive up to n = 7") {
    std::size_t total = 0;
    for (std::size_t n = 1; n <= 7; ++n) {
        for (const auto& c : colorings_by_definition(n)) {
            REQUIRE(partition_to_coloring(coloring_to_partition(c), n) == c);
            REQUIRE(canonicalize(c.entries()) == c);
            ++total;
        }
    }
    CHECK(total == 2 + 6 + 24 + 116 + 648 + 4088 + 28640);
}

TEST_CASE("canonicalize relabels arbitrary signed labelings") {
    CHECK(canonicalize(std::vector<int>{5, -5, 0, 7, 5}) == cv({1, -1, 0, 2, 1}));
    CHECK(canonicalize(std::vector<int>{-3, 3, -3}) == cv({1, -1, 1}));
    CHECK(canonicalize(std::vector<Int>{0, 0, 9}) == cv({0, 0, 1}));
}

TEST_CASE("signed_delta") {
    CHECK(signed_delta(2, 2) == 1);
    CHECK(signed_delta(2, -2) == -1);
    CHECK(signed_delta(1, 3) == 0);
    CHECK(signed_delta(0, 0) == 1);
}

TEST_CASE("basis_of and coloring_from_basis") {
    auto d = basis_of(cv({1, 0, 1, 2, -2}));
    CHECK(d.cols() == 2);
    CHECK(d.column(0) == std::vector<int>{1, 0, 1, 0, 0});
    CHECK(d.column(1) == std::vector<int>{0, 0, 0, 1, -1});
    CHECK(coloring_from_basis(d) == cv({1, 0, 1, 2, -2}));

    auto e = basis_of(cv({1, 2, 1}));
    CHECK(e.column(0) == std::vector<int>{1, 0, 1});
    CHECK(e.column(1) == std::vector<int>{0, 1, 0});

    auto z = basis_of(cv({0, 0, 0}));
    CHECK(z.rows() == 3);
    CHECK(z.cols() == 0);
    CHECK(coloring_from_basis(BasisMatrix(2, 0, {})) == cv({0, 0}));
    CHECK(coloring_from_basis(BasisMatrix(3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1})) == cv({1, 2, 3}));

    SUBCASE("invariant violations") {
        CHECK_THROWS_AS(BasisMatrix(2, 2, {1, 1, 0, 0}), InvalidArgument);    // two nonzeros in a row
        CHECK_THROWS_AS(BasisMatrix(2, 2, {0, 1, 1, 0}), InvalidArgument);    // not echelon
        CHECK_THROWS_AS(BasisMatrix(2, 1, {0, 0}), InvalidArgument);          // zero column
        CHECK_THROWS_AS(BasisMatrix(2, 1, {-1, 1}), InvalidArgument);         // leading -1
        CHECK_THROWS_AS(BasisMatrix(1, 1, {2}), InvalidArgument);
    }
}

TEST_CASE("basis soundness for every coloring up to n = 6") {
    for (std::size_t n = 1; n <= 6; ++n) {
        for (const auto& c : colorings_by_definition(n)) {
            BasisMatrix d = basis_of(c);  // constructor enforces the invariants
            REQUIRE(d.cols() == dimension(c));
            REQUIRE(coloring_from_basis(d) == c);
        }
    }
}

TEST_CASE("colors_of and dimension") {
    CHECK(colors_of(cv({1, 0, 1, 2, -2})) == std::set<int>{0, 1, 2});
    CHECK(dimension(cv({1, 0, 1, 2, -2})) == 2);
    CHECK(colors_of(cv({1, 1, 1, 1})) == std::set<int>{1});
    CHECK(colors_of(cv({0, 0})) == std::set<int>{0});
    CHECK(dimension(cv({0, 0})) == 0);
}

TEST_CASE("is_synchrony and is_evenly_tagged") {
    CHECK(is_synchrony(cv({1, 2, 2, 1, 3})));
    CHECK_FALSE(is_synchrony(cv({1, 0, 2, 1, -1})));
    CHECK(is_synchrony(cv({1})));

    CHECK(is_evenly_tagged(cv({1, -1})));
    CHECK_FALSE(is_evenly_tagged(cv({1, 1})));
    CHECK(is_evenly_tagged(cv({1, 0, -1})));
    CHECK_FALSE(is_evenly_tagged(cv({1, 1, -1})));
    CHECK(is_evenly_tagged(cv({1, 2, -1, -2})));
}

TEST_CASE("membership") {
    auto c = cv({1, 0, 2, 1, -1});
    CHECK(membership(c, rationals({3, 0, 7, 3, -3})));
    CHECK_FALSE(membership(c, rationals({3, 1, 7, 3, -3})));
    std::vector<Rational> v{Rational(1, 2), Rational(-7, 3), Rational(5)};
    CHECK(membership(cv({1, 2, 3}), v));
    CHECK_THROWS_AS(membership(c, rationals({1, 2})), InvalidArgument);
}

TEST_CASE("membership agrees with exact span test") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> len(1, 6), entry(-3, 3), coin(0, 1);
    for (int trial = 0; trial < 3000; ++trial) {
        auto c = random_coloring(rng, static_cast<std::size_t>(len(rng)));
        BasisMatrix d = basis_of(c);
        std::vector<Rational> v(c.size());
        if (coin(rng)) {
            // In the span by construction.
            for (std::size_t k = 0; k < d.cols(); ++k) {
                Rational a(entry(rng), 1 + coin(rng));
                for (std::size_t i = 0; i < c.size(); ++i) v[i] += a * Rational(d(i, k));
            }
        } else {
            for (auto& x : v) x = Rational(entry(rng), 1 + coin(rng));
        }
        // Solve D a = v: column supports are disjoint, so a_k is read off the leading row.
        std::vector<Rational> coef(d.cols());
        for (std::size_t k = 0; k < d.cols(); ++k)
            for (std::size_t i = 0; i < c.size(); ++i)
                if (d(i, k) == 1) {
                    coef[k] = v[i];
                    break;
                }
        bool in_span = true;
        for (std::size_t i = 0; i < c.size(); ++i) {
            Rational r;
            for (std::size_t k = 0; k < d.cols(); ++k) r += coef[k] * Rational(d(i, k));
            in_span = in_span && r == v[i];
        }
        REQUIRE(membership(c, v) == in_span);
    }
}

TEST_CASE("is_invariant examples") {
    auto m = three_vertex_matrix();
    CHECK(is_invariant(m, cv({1, 2, 1})));
    CHECK_FALSE(is_invariant(m, cv({1, 1, 1})));
    CHECK(is_invariant(m, cv({1, 2, 3})));
    CHECK(is_invariant(m, cv({0, 0, 0})));
    CHECK_THROWS_AS(is_invariant(m, cv({1, 2})), InvalidArgument);

    std::mt19937 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        auto r = random_matrix(rng, 6, -5, 5);
        CHECK(is_invariant(r, ColoringVector::full(6)));
        CHECK(is_invariant(r, ColoringVector::zero(6)));
    }
}

TEST_CASE("is_invariant agrees with two independent formulations") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> len(1, 6);
    int invariant_hits = 0;
    for (int trial = 0; trial < 400; ++trial) {
        std::size_t n = static_cast<std::size_t>(len(rng));
        auto m = random_matrix(rng, n, -2, 2);
        for (const auto& c : colorings_by_definition(std::min<std::size_t>(n, 4))) {
            if (c.size() != n) break;
            bool a = is_invariant(m, c);
            REQUIRE(a == invariant_by_images(m, c));
            REQUIRE(a == invariant_by_pairs(m, c));
            invariant_hits += a;
        }
        for (int s = 0; s < 20; ++s) {
            auto c = random_coloring(rng, n);
            bool a = is_invariant(m, c);
            REQUIRE(a == invariant_by_images(m, c));
            REQUIRE(a == invariant_by_pairs(m, c));
            invariant_hits += a;
        }
    }
    CHECK(invariant_hits > 0);
}

TEST_CASE("invariance is unchanged by nonzero scaling") {
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> len(1, 6), factor(-4, 4);
    for (int trial = 0; trial < 2000; ++trial) {
        std::size_t n = static_cast<std::size_t>(len(rng));
        auto m = random_matrix(rng, n, -3, 3);
        auto c = random_coloring(rng, n);
        int a = factor(rng);
        if (a == 0) a = 2;
        REQUIRE(is_invariant(m, c) == is_invariant(m.scaled(a), c));
    }
}

TEST_CASE("leq_extended examples") {
    CHECK(leq_extended(cv({1, 2, 3}), cv({0, 0, 0})));
    CHECK(leq_extended(cv({1, 2, 1}), cv({1, 0, 1})));
    CHECK_FALSE(leq_extended(cv({1, 0, 1}), cv({1, 2, 1})));
    CHECK(leq_extended(std::vector<int>{1, 2, 1}, std::vector<Int>{2, 0, 2}));
    CHECK_THROWS_AS(leq_extended(std::vector<int>{1, 2}, std::vector<Int>{1}), InvalidArgument);
}

TEST_CASE("leq_extended is a partial order on colorings up to n = 5") {
    for (std::size_t n = 1; n <= 5; ++n) {
        auto all = colorings_by_definition(n);
        std::size_t m = all.size();
        std::vector<std::bitset<648>> leq(m);
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) leq[a][b] = leq_extended(all[a], all[b]);
        for (std::size_t a = 0; a < m; ++a) {
            REQUIRE(leq[a][a]);
            for (std::size_t b = 0; b < m; ++b) {
                if (!leq[a][b]) continue;
                if (a != b) REQUIRE_FALSE(leq[b][a]);
                // Transitivity: everything above b is above a.
                REQUIRE((leq[b] & ~leq[a]).none());
            }
        }
    }
}

TEST_CASE("integer matrices reject bad shapes") {
    CHECK_THROWS_AS(IntegerMatrix(0), InvalidArgument);
    CHECK_THROWS_AS(IntegerMatrix({{1, 2}, {3}}), InvalidArgument);
}
