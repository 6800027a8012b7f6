#include "p3iso/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <numeric>
#include <thread>

#include "p3iso/bounded.hpp"
#include "p3iso/canonical.hpp"
#include "p3iso/exact.hpp"
#include "p3iso/patterns.hpp"

namespace p3iso {

namespace {

bool connected_without(const Graph& g, int v) {
    const VertexSet rest = g.vertices().without(v);
    if (rest.count() <= 1) return true;
    VertexSet reached = VertexSet::single(rest.lowest());
    VertexSet frontier = reached;
    while (!frontier.empty()) {
        VertexSet next;
        frontier.for_each([&](int u) { next |= g.neighbors(u); });
        frontier = (next & rest) - reached;
        reached |= frontier;
    }
    return reached == rest;
}

struct Augmenter {
    int target;
    bool connected_only;
    const std::function<void(const Graph&)>& sink;

    // Representatives of the Aut(g)-orbits on attachment subsets.
    std::vector<std::uint32_t> subset_orbit_reps(int k, const std::vector<Permutation>& auts) const {
        const std::uint32_t limit = std::uint32_t{1} << k;
        std::vector<std::uint32_t> parent(limit);
        std::iota(parent.begin(), parent.end(), 0u);
        const auto find = [&](std::uint32_t m) {
            while (parent[m] != m) {
                parent[m] = parent[parent[m]];
                m = parent[m];
            }
            return m;
        };
        for (const Permutation& a : auts)
            for (std::uint32_t m = 1; m < limit; ++m) {
                std::uint32_t image = 0;
                for (int v = 0; v < k; ++v)
                    if ((m >> v) & 1) image |= std::uint32_t{1} << a[static_cast<std::size_t>(v)];
                std::uint32_t x = find(m), y = find(image);
                if (x != y) parent[std::max(x, y)] = std::min(x, y);
            }
        std::vector<std::uint32_t> reps;
        for (std::uint32_t m = connected_only ? 1 : 0; m < limit; ++m)
            if (find(m) == m) reps.push_back(m);
        return reps;
    }

    void expand(const Graph& g, const std::vector<Permutation>& auts) const {
        const int k = g.order();
        std::vector<VertexSet> rows(static_cast<std::size_t>(k + 1));
        for (int v = 0; v < k; ++v) rows[static_cast<std::size_t>(v)] = g.neighbors(v);
        for (std::uint32_t mask : subset_orbit_reps(k, auts)) {
            for (int v = 0; v < k; ++v) {
                rows[static_cast<std::size_t>(v)] = g.neighbors(v);
                if ((mask >> v) & 1) rows[static_cast<std::size_t>(v)].add(k);
            }
            rows[static_cast<std::size_t>(k)] = VertexSet(mask);
            const Graph child = Graph::from_adjacency(k + 1, rows);
            const CanonicalForm cf = canonical_form(child);
            int del = -1;
            for (int pos = k; pos >= 0; --pos) {
                const int v = cf.order[static_cast<std::size_t>(pos)];
                if (!connected_only || connected_without(child, v)) {
                    del = v;
                    break;
                }
            }
            if (del < 0) throw internal_error("augmentation: no deletable vertex");
            if (cf.orbit[static_cast<std::size_t>(k)] != cf.orbit[static_cast<std::size_t>(del)])
                continue;
            if (k + 1 == target) {
                sink(child);
            } else {
                const CanonicalForm with_autos = canonical_form(child, true);
                expand(child, with_autos.automorphisms);
            }
        }
    }
};

}  // namespace

void enumerate_graphs(int n, bool connected_only,
                      const std::function<void(const Graph&)>& sink) {
    if (n < 1 || n > 9)
        throw precondition_error("enumerate: supported range is 1 <= n <= 9");
    const Graph k1 = Graph::from_edges(1, {});
    if (n == 1) {
        sink(k1);
        return;
    }
    Augmenter{n, connected_only, sink}.expand(k1, {});
}

void enumerate_connected(int n, const std::function<void(const Graph&)>& sink) {
    enumerate_graphs(n, true, sink);
}

std::vector<Graph> ingest_graph6_stream(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    long long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        try {
            out.push_back(parse_graph6(line));
        } catch (const parse_error& e) {
            throw parse_error("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

namespace {

struct GraphVerdict {
    bool c6free = false;
    int iota = -1;
    bool tight = false;
    std::vector<std::string> failed_claims;
};

GraphVerdict check_graph(const Graph& g, int bound, bool full_checks) {
    GraphVerdict verdict;
    if (has_induced_cycle(g, 6)) return verdict;
    verdict.c6free = true;

    const auto within = min_isolating_upto(g, bound);
    if (!within) {
        verdict.failed_claims.push_back("iota_le_floor_n_plus_1_over_4");
        verdict.iota = bound + 1;  // unknown beyond the bound
        return verdict;
    }
    verdict.iota = within->iota;
    const int n = g.order();
    verdict.tight = (n % 4 == 3) && verdict.iota * 4 == n + 1;
    if (!full_checks) return verdict;

    if (g.max_degree() >= 5 && verdict.iota > n / 4)
        verdict.failed_claims.push_back("max_degree_5_iota_le_n_over_4");

    if (verdict.tight) {
        for (int v = 0; v < n; ++v) {
            const int sub = iota_exact(remove_vertices(g, VertexSet::single(v)).graph).iota;
            if (sub != verdict.iota - 1) {
                verdict.failed_claims.push_back("tight_vertex_reduction");
                break;
            }
        }
        for (int v = 0; v < n; ++v) {
            if (static_cast<int>(reduce_tight(g, v).count()) > verdict.iota - 1) {
                verdict.failed_claims.push_back("reduce_tight_size");
                break;
            }
        }
    }

    try {
        const BoundedSetResult res = isolating_set_bounded(g, BoundMode::exact_oracle);
        if (!is_p3_isolating(g, res.set) || res.set.count() > bound)
            verdict.failed_claims.push_back("bounded_algorithm");
    } catch (const std::exception&) {
        verdict.failed_claims.push_back("bounded_algorithm");
    }
    return verdict;
}

VerificationReport analyze(int n, const std::vector<Graph>& graphs, int jobs, bool full_checks) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.n = n;
    report.connected_count = static_cast<long long>(graphs.size());
    report.bound = (n + 1) / 4;

    std::vector<GraphVerdict> verdicts(graphs.size());
    jobs = std::max(1, jobs);
    if (jobs == 1 || graphs.size() < 2) {
        for (std::size_t i = 0; i < graphs.size(); ++i)
            verdicts[i] = check_graph(graphs[i], report.bound, full_checks);
    } else {
        std::atomic<std::size_t> cursor{0};
        std::vector<std::thread> workers;
        workers.reserve(static_cast<std::size_t>(jobs));
        for (int w = 0; w < jobs; ++w)
            workers.emplace_back([&] {
                for (std::size_t i = cursor.fetch_add(1); i < graphs.size();
                     i = cursor.fetch_add(1))
                    verdicts[i] = check_graph(graphs[i], report.bound, full_checks);
            });
        for (std::thread& t : workers) t.join();
    }

    // merge in enumeration order: identical for any worker count
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const GraphVerdict& v = verdicts[i];
        if (!v.c6free) continue;
        ++report.c6free_count;
        report.empirical_f = std::max(report.empirical_f, v.iota);
        if (v.tight) report.tight_witnesses.push_back(to_graph6(graphs[i]));
        for (const std::string& claim : v.failed_claims)
            report.violations.push_back({claim, to_graph6(graphs[i])});
    }
    report.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return report;
}

std::vector<Graph> collect_connected(int n) {
    std::vector<Graph> graphs;
    enumerate_connected(n, [&](const Graph& g) { graphs.push_back(g); });
    return graphs;
}

}  // namespace

VerificationReport compute_f(int n, int jobs) {
    return analyze(n, collect_connected(n), jobs, false);
}

std::vector<VerificationReport> verify_theorem(int n_max, int jobs) {
    if (n_max < 1 || n_max > 9)
        throw precondition_error("verify_theorem: supported range is 1 <= n_max <= 9");
    std::vector<VerificationReport> reports;
    for (int n = 1; n <= n_max; ++n)
        reports.push_back(analyze(n, collect_connected(n), jobs, true));
    return reports;
}

std::vector<VerificationReport> verify_catalog(const std::vector<Graph>& graphs, int jobs) {
    std::map<int, std::vector<Graph>> by_order;
    for (const Graph& g : graphs)
        if (g.connected()) by_order[g.order()].push_back(g);
    std::vector<VerificationReport> reports;
    for (const auto& [n, batch] : by_order) reports.push_back(analyze(n, batch, jobs, true));
    return reports;
}

}  // namespace p3iso
