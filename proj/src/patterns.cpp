#include "p3iso/patterns.hpp"

#include <algorithm>

namespace p3iso {

bool contains_p3(const Graph& g) { return g.max_degree() >= 2; }

bool is_matching(const Graph& g) { return g.max_degree() <= 1; }

bool residual_is_matching(const Graph& g, VertexSet survivors) {
    bool ok = true;
    survivors.for_each([&](int v) {
        if ((g.neighbors(v) & survivors).count() >= 2) ok = false;
    });
    return ok;
}

bool is_p3_isolating(const Graph& g, VertexSet d) {
    return residual_is_matching(g, g.vertices() - closed_neighborhood(g, d));
}

namespace {

// DFS over chordless paths p0 < p1, ..., p_{L-1} with p0 minimal on the
// cycle and p1 < p_{L-1} fixing the direction. forbidden[i] collects the
// used vertices plus N[p_j] for 1 <= j <= i-1; the start's neighborhood is
// excluded separately so the closing vertex may return to it.
struct CycleSearch {
    const Graph& g;
    const int length;
    std::vector<int> path;
    std::vector<VertexSet> forbidden;

    CycleSearch(const Graph& graph, int len) : g(graph), length(len) {}

    bool extend() {
        const int i = static_cast<int>(path.size());
        const int start = path[0];
        const int last = path.back();
        if (i == length - 1) {
            VertexSet cands = g.neighbors(last) & g.neighbors(start);
            cands = cands - forbidden.back();
            cands = cands - VertexSet::first_n(std::max(start, path[1]) + 1);
            const int v = cands.lowest();
            if (v < 0) return false;
            path.push_back(v);
            return true;
        }
        VertexSet cands = g.neighbors(last) - forbidden.back();
        cands = cands - VertexSet::first_n(start + 1);
        cands = cands - g.closed_neighbors(start);
        bool found = false;
        cands.for_each([&](int v) {
            if (found) return;
            path.push_back(v);
            forbidden.push_back(forbidden.back() | g.closed_neighbors(last));
            if (extend()) {
                found = true;
                return;
            }
            forbidden.pop_back();
            path.pop_back();
        });
        return found;
    }
};

}  // namespace

std::optional<InducedCycleWitness> find_induced_cycle(const Graph& g, int length) {
    if (length < 3) throw precondition_error("find_induced_cycle: length must be >= 3");
    if (g.order() < length) return std::nullopt;
    CycleSearch search(g, length);
    for (int start = 0; start + length <= g.order(); ++start) {
        bool found = false;
        (g.neighbors(start) - VertexSet::first_n(start + 1)).for_each([&](int second) {
            if (found) return;
            search.path = {start, second};
            search.forbidden = {VertexSet::of({start, second})};
            if (search.extend()) found = true;
        });
        if (found) return InducedCycleWitness{search.path};
    }
    return std::nullopt;
}

}  // namespace p3iso
