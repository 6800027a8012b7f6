#include "p3iso/exact.hpp"

#include "p3iso/patterns.hpp"

namespace p3iso {

namespace {

// Depth-limited search for an isolating set of size <= budget extending the
// deletions encoded by `survivors`. Appends chosen vertices to `chosen`.
bool isolate_within(const Graph& g, VertexSet survivors, int budget, VertexSet& chosen) {
    // pivot b: maximum residual degree, smallest label on ties
    int b = -1;
    int bdeg = 1;
    survivors.for_each([&](int v) {
        const int d = (g.neighbors(v) & survivors).count();
        if (d > bdeg) {
            b = v;
            bdeg = d;
        }
    });
    if (b < 0) return true;  // residual is a matching
    if (budget == 0) return false;
    const VertexSet resid_nb = g.neighbors(b) & survivors;
    const int a = resid_nb.lowest();
    const int c = resid_nb.without(a).lowest();
    const VertexSet branch = closed_neighborhood(g, VertexSet::of({a, b, c}));
    bool found = false;
    branch.for_each([&](int u) {
        if (found) return;
        chosen.add(u);
        if (isolate_within(g, survivors - g.closed_neighbors(u), budget - 1, chosen))
            found = true;
        else
            chosen.remove(u);
    });
    return found;
}

// Iterative deepening on one connected (or arbitrary small) graph.
std::optional<ExactResult> solve_upto(const Graph& g, int kmax) {
    for (int k = 0; k <= kmax; ++k) {
        VertexSet chosen;
        if (isolate_within(g, g.vertices(), k, chosen))
            return ExactResult{chosen.count(), chosen};
    }
    return std::nullopt;
}

}  // namespace

std::optional<ExactResult> min_isolating_upto(const Graph& g, int kmax) {
    if (kmax < 0) throw precondition_error("min_isolating_upto: negative budget");
    ExactResult total;
    for (const DeletionResult& comp : components(g)) {
        const auto sub = solve_upto(comp.graph, kmax - total.iota);
        if (!sub) return std::nullopt;
        total.iota += sub->iota;
        total.witness |= comp.to_original(sub->witness);
    }
    return total;
}

ExactResult iota_exact(const Graph& g) {
    // D = V(G) always isolates, so the budget n never fails
    return *min_isolating_upto(g, g.order());
}

bool is_tight(const Graph& g) {
    if (!g.connected()) throw precondition_error("is_tight: graph must be connected");
    const int n = g.order();
    return n % 4 == 3 && iota_exact(g).iota == (n + 1) / 4;
}

}  // namespace p3iso
