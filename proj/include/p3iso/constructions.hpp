#pragma once

#include <string>

#include "p3iso/graph.hpp"

namespace p3iso {

// Chain of k-1 diamond blocks (K4 minus an edge) closed by a triangle.
// Block i (1-based, i < k) occupies labels 4(i-1)..4(i-1)+3 as
// (v_i, v_i', w_i, w_i'); the final triangle (v_k, v_k', w_k) sits at
// 4(k-1)..4(k-1)+2. Chains join w_i to v_{i+1} and w_i' to v_{i+1}'.
// Order 4k-1, size 7k-4.
Graph build_bk_star(int k);

// For k = floor((n+1)/4) and r = n+1-4k: the path P_n when k = 0, the
// chain graph when r = 0, otherwise the chain graph with a pendant path of
// r extra vertices (labels 4k-1..n-1) hung on v_1 = label 0.
Graph build_bn(int n);

// Spine of b_n = n - 3*floor(n/4) vertices (labels 0..b_n-1) where vertex 0
// is a hub adjacent to the next h-3 spine vertices, the spine path edges
// start only after them, and each of the first floor(n/4) spine vertices
// carries a fully joined triangle (triangle i at labels b_n+3(i-1)..).
// Requires h >= 5 and n >= 4(h-2); degree of the hub is h.
Graph build_bn_k3_h(int n, int h);

Graph build_cycle(int n);  // n >= 3
Graph build_path(int n);   // n >= 1
Graph build_k4_minus();    // labels 0..3, all edges but {2,3}

enum class Family { bk_star, b_n, b_n_k3_h, cycle, path, k4_minus };

// Parameter bundle for the CLI and batch generators.
struct ConstructionParams {
    Family family = Family::path;
    int k = 0;
    int n = 0;
    int h = 0;

    int a_n() const { return n / 4; }
    int b_n() const { return n - 3 * (n / 4); }
    int r() const { return n + 1 - 4 * ((n + 1) / 4); }

    Graph build() const;
};

std::string family_name(Family f);

}  // namespace p3iso
