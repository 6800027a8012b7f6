#include "p3iso/constructions.hpp"

namespace p3iso {

namespace {

// 5-edge diamond on (v, v', w, w'): every pair except {w, w'}.
void add_diamond_block(std::vector<std::pair<int, int>>& edges, int base) {
    const int v = base, vp = base + 1, w = base + 2, wp = base + 3;
    edges.insert(edges.end(), {{v, vp}, {v, w}, {v, wp}, {vp, w}, {vp, wp}});
}

}  // namespace

Graph build_bk_star(int k) {
    if (k < 1) throw precondition_error("build_bk_star: k must be >= 1");
    const int n = 4 * k - 1;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k - 1; ++i) add_diamond_block(edges, 4 * i);
    const int t = 4 * (k - 1);  // final triangle (v_k, v_k', w_k)
    edges.insert(edges.end(), {{t, t + 1}, {t, t + 2}, {t + 1, t + 2}});
    for (int i = 0; i < k - 1; ++i) {
        edges.emplace_back(4 * i + 2, 4 * (i + 1));      // w_i  v_{i+1}
        edges.emplace_back(4 * i + 3, 4 * (i + 1) + 1);  // w_i' v_{i+1}'
    }
    return Graph::from_edges(n, edges);
}

Graph build_bn(int n) {
    if (n < 1) throw precondition_error("build_bn: n must be >= 1");
    const int k = (n + 1) / 4;
    const int r = n + 1 - 4 * k;
    if (k == 0) return build_path(n);
    if (r == 0) return build_bk_star(k);
    std::vector<std::pair<int, int>> edges = build_bk_star(k).edges();
    int prev = 0;  // v_1
    for (int t = 0; t < r; ++t) {
        edges.emplace_back(prev, 4 * k - 1 + t);
        prev = 4 * k - 1 + t;
    }
    return Graph::from_edges(n, edges);
}

Graph build_bn_k3_h(int n, int h) {
    if (h < 5) throw precondition_error("build_bn_k3_h: h must be >= 5");
    if (n < 4 * (h - 2)) throw precondition_error("build_bn_k3_h: n must be >= 4(h-2)");
    const int a = n / 4;
    const int b = n - 3 * a;
    std::vector<std::pair<int, int>> edges;
    // hub star replaces the first h-3 path edges
    for (int i = 1; i <= h - 3; ++i) edges.emplace_back(0, i);
    for (int i = h - 3; i < b - 1; ++i) edges.emplace_back(i, i + 1);
    for (int i = 0; i < a; ++i) {
        const int t = b + 3 * i;
        edges.insert(edges.end(), {{t, t + 1}, {t, t + 2}, {t + 1, t + 2}});
        for (int j = 0; j < 3; ++j) edges.emplace_back(i, t + j);
    }
    return Graph::from_edges(n, edges);
}

Graph build_cycle(int n) {
    if (n < 3) throw precondition_error("build_cycle: n must be >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, edges);
}

Graph build_path(int n) {
    if (n < 1) throw precondition_error("build_path: n must be >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges);
}

Graph build_k4_minus() {
    return Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

Graph ConstructionParams::build() const {
    switch (family) {
        case Family::bk_star: return build_bk_star(k);
        case Family::b_n: return build_bn(n);
        case Family::b_n_k3_h: return build_bn_k3_h(n, h);
        case Family::cycle: return build_cycle(n);
        case Family::path: return build_path(n);
        case Family::k4_minus: return build_k4_minus();
    }
    throw internal_error("ConstructionParams: bad family tag");
}

std::string family_name(Family f) {
    switch (f) {
        case Family::bk_star: return "bkstar";
        case Family::b_n: return "bn";
        case Family::b_n_k3_h: return "bnk3h";
        case Family::cycle: return "cycle";
        case Family::path: return "path";
        case Family::k4_minus: return "k4minus";
    }
    throw internal_error("family_name: bad family tag");
}

}  // namespace p3iso
