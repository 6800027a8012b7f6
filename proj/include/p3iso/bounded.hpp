#pragma once

#include <optional>
#include <string>
#include <vector>

#include "p3iso/exact.hpp"
#include "p3iso/graph.hpp"

namespace p3iso {

// exact_oracle backs the tightness classification and the accounting-
// critical sub-solves with the exact solver, which certifies the size
// bound floor((n+1)/4). fast replaces those with recursive calls: the
// returned set is still verified isolating, but the bound is best effort.
enum class BoundMode { exact_oracle, fast };

// Pivot state for one recursion step: the components H of G - N[v], their
// split into tight components (iota = (|V(H)|+1)/4) and the rest, which
// pivot neighbors link into which component, and the chosen anchors.
struct ComponentClassification {
    int pivot = -1;
    VertexSet pivot_neighbors;                // N(v)
    std::vector<DeletionResult> comps;        // components of G - N[v]
    std::vector<char> tight;                  // per comp: member of the tight list
    std::vector<VertexSet> linked_to;         // per comp: x in N(v) with an edge into it
    std::vector<int> anchor;                  // x_H (smallest linked x) for tight comps, else -1
    std::vector<int> anchor2;                 // second linked x for tight comps, else -1
    VertexSet anchors_x;                      // X  = union of anchor over tight comps
    VertexSet anchors_x2;                     // X' = union of anchor2 over tight comps
    VertexSet spare_w;                        // W  = N(v) \ X
    int case1_x = -1;                         // smallest x linked to >= 2 tight comps
    // exact results for components with |V(H)| = 3 (mod 4) (exact_oracle)
    std::vector<std::optional<ExactResult>> exact_r3;

    VertexSet comp_vertices(std::size_t i) const {
        VertexSet s;
        for (int v : comps[i].old_label) s.add(v);
        return s;
    }
    // smallest-label contact y_{x,H} of pivot neighbor x in component i
    int contact(const Graph& g, int x, std::size_t i) const {
        return (g.neighbors(x) & comp_vertices(i)).lowest();
    }
};

struct BoundedSetResult {
    VertexSet set;
    int bound = 0;  // floor((n+1)/4) or floor(n/4), per the case taken
    std::vector<std::string> case_trace;
};

// Produces a verified P3-isolating set of a connected graph with no induced
// 6-cycles by recursing on a maximum-degree pivot and the component
// classification of G - N[v]. In exact_oracle mode the result never exceeds
// floor((n+1)/4). Throws precondition_error on disconnected input or an
// induced 6-cycle, internal_error if any certification check fails.
BoundedSetResult isolating_set_bounded(const Graph& g, BoundMode mode = BoundMode::exact_oracle);

// For tight G (iota = (n+1)/4): a P3-isolating set of G - v of size at most
// iota(G) - 1, assembled from exact solutions of the components of G - v.
VertexSet reduce_tight(const Graph& g, int v);

// The classification step in isolation, for inspection and tests.
ComponentClassification classify_components(const Graph& g, int pivot, BoundMode mode);

}  // namespace p3iso
