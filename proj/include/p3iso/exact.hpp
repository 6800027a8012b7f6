#pragma once

#include <optional>

#include "p3iso/graph.hpp"

namespace p3iso {

// Minimum P3-isolating set with a witness attaining it. The witness is the
// first one found under the solver's fixed branching order, so results are
// reproducible across runs.
struct ExactResult {
    int iota = 0;
    VertexSet witness;
};

// Exact P3-isolation number. Decomposes into components and solves each by
// iterative-deepening branch and bound over P3 covers: at each node the
// residual graph G - N[D] yields a 3-vertex path (a,b,c) with b of maximum
// residual degree, and every isolating set must meet N[{a,b,c}], which is
// the branch set. Disconnected input allowed.
ExactResult iota_exact(const Graph& g);

// Smallest isolating set of size <= kmax, or nullopt if none exists.
std::optional<ExactResult> min_isolating_upto(const Graph& g, int kmax);

// True iff n = 3 (mod 4) and iota(G) = (n+1)/4. Requires connected input.
bool is_tight(const Graph& g);

}  // namespace p3iso
