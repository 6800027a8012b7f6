#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "p3iso/constructions.hpp"
#include "p3iso/enumerate.hpp"
#include "p3iso/patterns.hpp"

using namespace p3iso;

TEST_CASE("contains_p3 and is_matching") {
    CHECK(contains_p3(build_cycle(3)));
    CHECK_FALSE(contains_p3(Graph::from_edges(2, {{0, 1}})));
    CHECK_FALSE(contains_p3(Graph::from_edges(6, {{0, 1}, {2, 3}, {4, 5}})));

    CHECK(is_matching(Graph::from_edges(0, {})));
    CHECK(is_matching(Graph::from_edges(4, {{0, 1}, {2, 3}})));
    CHECK_FALSE(is_matching(build_path(3)));
}

TEST_CASE("is_p3_isolating on known sets") {
    const Graph c7 = build_cycle(7);
    CHECK(is_p3_isolating(c7, VertexSet::of({0, 3})));
    CHECK_FALSE(is_p3_isolating(c7, VertexSet::single(0)));
    CHECK(is_p3_isolating(c7, c7.vertices()));
    // empty set isolates iff there is no P3 at all
    CHECK(is_p3_isolating(Graph::from_edges(4, {{0, 1}, {2, 3}}), VertexSet{}));
    CHECK_FALSE(is_p3_isolating(build_path(3), VertexSet{}));
}

TEST_CASE("isolation is monotone in the deletion set") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const Graph g = oracle::random_graph(rng, n, 0.4);
        const VertexSet d{rng() & ((std::uint64_t{1} << n) - 1)};
        const VertexSet bigger = d | VertexSet{rng() & ((std::uint64_t{1} << n) - 1)};
        if (is_p3_isolating(g, d)) CHECK(is_p3_isolating(g, bigger));
    }
}

TEST_CASE("is_p3_isolating agrees with the triple-scan oracle") {
    for (int n = 1; n <= 6; ++n)
        enumerate_connected(n, [&](const Graph& g) {
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
                CHECK(is_p3_isolating(g, VertexSet{mask}) ==
                      oracle::is_isolating(g, VertexSet{mask}));
        });
    std::mt19937_64 rng(99);
    enumerate_connected(7, [&](const Graph& g) {
        for (int s = 0; s < 8; ++s) {
            const VertexSet d{rng() & 0x7f};
            CHECK(is_p3_isolating(g, d) == oracle::is_isolating(g, d));
        }
    });
}

TEST_CASE("induced cycle witnesses") {
    const auto c6_in_c6 = find_induced_cycle(build_cycle(6), 6);
    REQUIRE(c6_in_c6.has_value());
    CHECK(c6_in_c6->vertices == std::vector<int>{0, 1, 2, 3, 4, 5});

    CHECK_FALSE(find_induced_cycle(build_bk_star(4), 6).has_value());

    // every 4-cycle of K4 has a chord
    const Graph k4 = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK_FALSE(find_induced_cycle(k4, 4).has_value());

    // C7 contains an induced C7 but no shorter induced cycle above girth
    const Graph c7 = build_cycle(7);
    CHECK(find_induced_cycle(c7, 7).has_value());
    CHECK_FALSE(find_induced_cycle(c7, 5).has_value());
    CHECK_FALSE(find_induced_cycle(c7, 6).has_value());

    CHECK_THROWS_AS(find_induced_cycle(c7, 2), precondition_error);
}

TEST_CASE("witness vertices really form an induced cycle") {
    std::mt19937_64 rng(4242);
    int found = 0;
    for (int trial = 0; trial < 600; ++trial) {
        const int n = 5 + static_cast<int>(rng() % 4);
        const Graph g = oracle::random_graph(rng, n, 0.45);
        for (int len = 4; len <= n; ++len) {
            const auto wit = find_induced_cycle(g, len);
            if (!wit) continue;
            ++found;
            const auto& cyc = wit->vertices;
            REQUIRE(static_cast<int>(cyc.size()) == len);
            for (int i = 0; i < len; ++i)
                for (int j = i + 1; j < len; ++j) {
                    const bool consecutive = (j == i + 1) || (i == 0 && j == len - 1);
                    CHECK(g.adjacent(cyc[static_cast<std::size_t>(i)],
                                     cyc[static_cast<std::size_t>(j)]) == consecutive);
                }
        }
    }
    CHECK(found > 50);  // the generator must actually exercise the check
}

TEST_CASE("induced-C6 detection agrees with the subset-scan oracle") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 1500; ++trial) {
        const int n = 6 + static_cast<int>(rng() % 3);
        const Graph g = oracle::random_graph(rng, n, 0.2 + 0.1 * (trial % 6));
        CHECK(has_induced_cycle(g, 6) == oracle::has_induced_cycle_subset_scan(g, 6));
        CHECK(has_induced_cycle(g, 5) == oracle::has_induced_cycle_subset_scan(g, 5));
    }
}
