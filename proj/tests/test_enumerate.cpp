#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "p3iso/canonical.hpp"
#include "p3iso/enumerate.hpp"

using namespace p3iso;

namespace {

long long count_connected(int n) {
    long long count = 0;
    enumerate_connected(n, [&](const Graph&) { ++count; });
    return count;
}

}  // namespace

TEST_CASE("connected counts match the known sequence") {
    const long long expected[] = {1, 1, 2, 6, 21, 112, 853, 11117};
    for (int n = 1; n <= 8; ++n) CHECK(count_connected(n) == expected[n - 1]);
}

TEST_CASE("connected count at the generator cap" * doctest::timeout(300)) {
    CHECK(count_connected(9) == 261080);
}

TEST_CASE("all-graph counts match the known sequence") {
    const long long expected[] = {1, 2, 4, 11, 34, 156, 1044};
    for (int n = 1; n <= 7; ++n) {
        long long count = 0;
        enumerate_graphs(n, false, [&](const Graph&) { ++count; });
        CHECK(count == expected[n - 1]);
    }
}

TEST_CASE("enumeration agrees with the brute-force isomorphism oracle") {
    // independent route: all labeled graphs, connected filter, canonical
    // code minimized over every permutation
    for (int n = 1; n <= 6; ++n) {
        std::set<std::uint64_t> brute;
        const int bits = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
            std::vector<std::pair<int, int>> edges;
            int bit = 0;
            for (int col = 1; col < n; ++col)
                for (int j = 0; j < col; ++j, ++bit)
                    if ((mask >> bit) & 1) edges.emplace_back(j, col);
            const Graph g = Graph::from_edges(n, edges);
            if (g.connected()) brute.insert(oracle::canonical_code_all_perms(g));
        }
        std::set<std::uint64_t> emitted;
        long long total = 0;
        enumerate_connected(n, [&](const Graph& g) {
            ++total;
            emitted.insert(oracle::canonical_code_all_perms(g));
        });
        CHECK(total == static_cast<long long>(emitted.size()));  // pairwise non-isomorphic
        CHECK(emitted == brute);                                 // exactly one per class
    }
}

TEST_CASE("enumerated graphs are connected with the right order") {
    enumerate_connected(7, [&](const Graph& g) {
        CHECK(g.order() == 7);
        CHECK(g.connected());
    });
    CHECK_THROWS_AS(enumerate_connected(0, [](const Graph&) {}), precondition_error);
    CHECK_THROWS_AS(enumerate_connected(10, [](const Graph&) {}), precondition_error);
}

TEST_CASE("canonical form is invariant under relabeling") {
    std::mt19937_64 rng(808);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const Graph g = oracle::random_graph(rng, n, 0.4);
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::pair<int, int>> edges;
        for (auto [u, v] : g.edges())
            edges.emplace_back(perm[static_cast<std::size_t>(u)],
                               perm[static_cast<std::size_t>(v)]);
        const Graph h = Graph::from_edges(n, edges);
        CHECK(canonical_form(g).code == canonical_form(h).code);
    }
}

TEST_CASE("distinct canonical codes separate non-isomorphic graphs") {
    // equal codes imply isomorphism by construction (the code encodes the
    // relabeled adjacency); the converse direction over a mixed pool
    std::mt19937_64 rng(4711);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 5);
        const Graph a = oracle::random_graph(rng, n, 0.4);
        const Graph b = oracle::random_graph(rng, n, 0.4);
        const bool iso =
            oracle::canonical_code_all_perms(a) == oracle::canonical_code_all_perms(b);
        CHECK((canonical_form(a).code == canonical_form(b).code) == iso);
    }
}

TEST_CASE("orbits are unions of automorphism images") {
    // path: the two leaves share an orbit, the center is alone
    const Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
    const CanonicalForm cf = canonical_form(p3, true);
    CHECK(cf.orbit[0] == cf.orbit[2]);
    CHECK(cf.orbit[1] != cf.orbit[0]);
    CHECK(cf.automorphisms.size() == 1);  // the leaf swap

    const Graph k4 = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(canonical_form(k4, true).automorphisms.size() == 23);  // 4! - identity
}

TEST_CASE("verification reports are worker-count independent") {
    for (int n = 5; n <= 7; ++n) {
        const VerificationReport one = compute_f(n, 1);
        const VerificationReport four = compute_f(n, 4);
        CHECK(one.same_content(four));
    }
    const auto serial = verify_theorem(6, 1);
    const auto parallel = verify_theorem(6, 3);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i)
        CHECK(serial[i].same_content(parallel[i]));
}

TEST_CASE("compute_f matches the closed form at small orders") {
    const int expected_f[] = {0, 0, 1, 1, 1, 1, 2};
    for (int n = 1; n <= 7; ++n) {
        const VerificationReport r = compute_f(n);
        CHECK(r.empirical_f == expected_f[n - 1]);
        CHECK(r.empirical_f == r.bound);
        CHECK(r.violations.empty());
    }
    const VerificationReport n3 = compute_f(3);
    CHECK(n3.tight_witnesses.size() == 2);  // the 3-path and the 3-cycle
    const VerificationReport n7 = compute_f(7);
    bool has_c7 = false;
    for (const std::string& w : n7.tight_witnesses)
        if (parse_graph6(w).min_degree() == 2 && parse_graph6(w).max_degree() == 2)
            has_c7 = true;
    CHECK(has_c7);
}

TEST_CASE("catalog verification groups by order") {
    std::vector<Graph> catalog;
    catalog.push_back(parse_graph6("Bw"));      // K3
    catalog.push_back(parse_graph6("FhCKG"));   // C7
    catalog.push_back(parse_graph6("Bg"));      // P3
    const auto reports = verify_catalog(catalog, 2);
    REQUIRE(reports.size() == 2);
    CHECK(reports[0].n == 3);
    CHECK(reports[0].connected_count == 2);
    CHECK(reports[0].empirical_f == 1);
    CHECK(reports[1].n == 7);
    CHECK(reports[1].empirical_f == 2);
    for (const auto& r : reports) CHECK(r.violations.empty());
}
