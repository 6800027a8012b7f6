#pragma once

#include <optional>
#include <vector>

#include "p3iso/graph.hpp"

namespace p3iso {

// Cyclically ordered vertex list of an induced cycle: consecutive pairs
// adjacent, all other pairs non-adjacent, vertices distinct.
struct InducedCycleWitness {
    std::vector<int> vertices;
};

// A P3 subgraph exists iff some vertex has degree >= 2.
bool contains_p3(const Graph& g);

// The edge set is a matching iff max degree <= 1.
bool is_matching(const Graph& g);

// True iff G - N[D] has no 3-vertex path.
bool is_p3_isolating(const Graph& g, VertexSet d);

// Same test restricted to the survivors mask (residual of some deletion);
// avoids building the residual graph in solver inner loops.
bool residual_is_matching(const Graph& g, VertexSet survivors);

// First induced cycle of the given length in canonical order (smallest
// start vertex, then smallest-label DFS, second vertex below the last).
// Exhaustive: returns nullopt iff no induced L-cycle exists.
std::optional<InducedCycleWitness> find_induced_cycle(const Graph& g, int length);

inline bool has_induced_cycle(const Graph& g, int length) {
    return find_induced_cycle(g, length).has_value();
}

}  // namespace p3iso
