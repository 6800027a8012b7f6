#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "p3iso/constructions.hpp"
#include "p3iso/enumerate.hpp"
#include "p3iso/graph.hpp"

using namespace p3iso;

TEST_CASE("from_edges builds the expected small graphs") {
    const Graph k3 = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(k3.edge_count() == 3);
    CHECK(k3.max_degree() == 2);

    const Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
    CHECK(p3.degree(1) == 2);
    CHECK(p3.degree(0) == 1);

    const Graph k1 = Graph::from_edges(1, {});
    CHECK(k1.order() == 1);
    CHECK(k1.edge_count() == 0);

    // duplicate pairs collapse
    const Graph dup = Graph::from_edges(2, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(dup.edge_count() == 1);
}

TEST_CASE("from_edges rejects bad labels and self-loops") {
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), precondition_error);
    CHECK_THROWS_AS(Graph::from_edges(3, {{-1, 0}}), precondition_error);
    CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), precondition_error);
    CHECK_THROWS_AS(Graph::from_edges(63, {}), precondition_error);
}

TEST_CASE("closed neighborhoods") {
    const Graph k3 = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(closed_neighborhood(k3, VertexSet::single(0)) == VertexSet::first_n(3));
    const Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
    CHECK(closed_neighborhood(p3, VertexSet::single(0)) == VertexSet::of({0, 1}));
    CHECK(closed_neighborhood(p3, VertexSet{}) == VertexSet{});
    CHECK_THROWS_AS(closed_neighborhood(p3, VertexSet::single(5)), precondition_error);
}

TEST_CASE("deletion of a closed neighborhood relabels densely") {
    const Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
    CHECK(delete_closed_neighborhood(p3, VertexSet::single(1)).graph.order() == 0);

    std::vector<std::pair<int, int>> c7;
    for (int i = 0; i < 7; ++i) c7.emplace_back(i, (i + 1) % 7);
    const Graph cycle7 = Graph::from_edges(7, c7);
    const DeletionResult res = delete_closed_neighborhood(cycle7, VertexSet::single(0));
    CHECK(res.graph.order() == 4);
    CHECK(res.old_label == std::vector<int>{2, 3, 4, 5});
    CHECK(res.graph.edge_count() == 3);  // the path 2-3-4-5
    CHECK(res.graph.max_degree() == 2);

    const DeletionResult unchanged = delete_closed_neighborhood(cycle7, VertexSet{});
    CHECK(unchanged.graph == cycle7);
}

TEST_CASE("components are ordered by smallest original label") {
    const Graph two_k3 = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    const auto comps = components(two_k3);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].old_label == std::vector<int>{0, 1, 2});
    CHECK(comps[1].old_label == std::vector<int>{3, 4, 5});
    CHECK(comps[0].graph.edge_count() == 3);

    CHECK(components(Graph::from_edges(0, {})).empty());
    CHECK(components(Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}})).size() == 1);
}

TEST_CASE("graph6 reference encodings") {
    // frozen against an independent reference encoder
    CHECK(to_graph6(Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}})) == "Bw");
    CHECK(to_graph6(Graph::from_edges(3, {{0, 1}, {1, 2}})) == "Bg");
    std::vector<std::pair<int, int>> c7;
    for (int i = 0; i < 7; ++i) c7.emplace_back(i, (i + 1) % 7);
    CHECK(to_graph6(Graph::from_edges(7, c7)) == "FhCKG");

    const Graph k3 = parse_graph6("Bw");
    CHECK(k3.edge_count() == 3);
    const Graph p3 = parse_graph6("Bg");
    CHECK(p3.adjacent(0, 1));
    CHECK(p3.adjacent(1, 2));
    CHECK_FALSE(p3.adjacent(0, 2));
    CHECK(parse_graph6("?").order() == 0);
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_AS(parse_graph6(""), parse_error);
    CHECK_THROWS_AS(parse_graph6("Bww"), parse_error);   // extra byte
    CHECK_THROWS_AS(parse_graph6("B"), parse_error);     // missing byte
    CHECK_THROWS_AS(parse_graph6("B\x1f"), parse_error); // byte below range
    CHECK_THROWS_AS(parse_graph6("~??"), parse_error);   // long form
    CHECK_THROWS_AS(parse_graph6("A?x"), parse_error);   // length mismatch
}

TEST_CASE("graph6 round-trips over all enumerated graphs up to n=7") {
    for (int n = 1; n <= 7; ++n)
        enumerate_connected(n, [&](const Graph& g) {
            const std::string s = to_graph6(g);
            CHECK(parse_graph6(s) == g);
            CHECK(to_graph6(parse_graph6(s)) == s);
        });
}

TEST_CASE("graph6 round-trips on large constructed graphs") {
    for (int n : {20, 33, 40, 62}) {
        const Graph g = build_bn(n);
        CHECK(parse_graph6(to_graph6(g)) == g);
    }
    const Graph hub = build_bn_k3_h(44, 7);
    CHECK(parse_graph6(to_graph6(hub)) == hub);
}

TEST_CASE("adjacency invariants survive construction and deletion") {
    std::vector<std::pair<int, int>> c7;
    for (int i = 0; i < 7; ++i) c7.emplace_back(i, (i + 1) % 7);
    const Graph g = Graph::from_edges(7, c7);
    for (int v = 0; v < g.order(); ++v) {
        CHECK_FALSE(g.adjacent(v, v));
        g.neighbors(v).for_each([&](int u) { CHECK(g.adjacent(u, v)); });
    }
    const DeletionResult del = remove_vertices(g, VertexSet::of({1, 4}));
    for (int v = 0; v < del.graph.order(); ++v) CHECK_FALSE(del.graph.adjacent(v, v));
    // relabeling preserves adjacency
    for (int v = 0; v < del.graph.order(); ++v)
        del.graph.neighbors(v).for_each([&](int u) {
            CHECK(g.adjacent(del.old_label[static_cast<std::size_t>(v)],
                             del.old_label[static_cast<std::size_t>(u)]));
        });
}

TEST_CASE("ingest reports line numbers on bad input") {
    std::istringstream ok("Bw\n\nBg\n");
    const auto graphs = ingest_graph6_stream(ok);
    REQUIRE(graphs.size() == 2);
    CHECK(graphs[0].edge_count() == 3);
    CHECK(graphs[1].edge_count() == 2);

    std::istringstream bad("Bw\nB\n");
    CHECK_THROWS_WITH_AS(ingest_graph6_stream(bad),
                         doctest::Contains("line 2"), parse_error);
}
