#include "p3iso/canonical.hpp"

#include <algorithm>

namespace p3iso {

namespace {

struct LabelSearch {
    const Graph& g;
    const int n;
    const int total_bits;
    const bool collect;

    bool have_best = false;
    std::uint64_t best = ~std::uint64_t{0};
    Permutation best_order{};
    Permutation order{};
    std::array<std::uint64_t, max_canon_vertices> adj{};
    std::array<std::int8_t, max_canon_vertices> uf{};
    // orderings are restricted to a fixed invariant rank sequence: vertices
    // keyed by (degree, sorted neighbor degrees). The rank is preserved by
    // every automorphism, so the minimum over rank-monotone orderings is
    // still a canonical form and still pairs up all automorphisms.
    std::array<std::int8_t, max_canon_vertices> rank{};
    std::array<std::int8_t, max_canon_vertices> rank_at_pos{};
    std::vector<Permutation> automorphisms;

    LabelSearch(const Graph& graph, bool collect_autos)
        : g(graph),
          n(graph.order()),
          total_bits(graph.order() * (graph.order() - 1) / 2),
          collect(collect_autos) {
        std::vector<std::vector<int>> keys(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            uf[static_cast<std::size_t>(v)] = static_cast<std::int8_t>(v);
            adj[static_cast<std::size_t>(v)] = graph.neighbors(v).bits();
            std::vector<int>& key = keys[static_cast<std::size_t>(v)];
            key.push_back(graph.degree(v));
            graph.neighbors(v).for_each([&](int u) { key.push_back(graph.degree(u)); });
            std::sort(key.begin() + 1, key.end());
        }
        std::vector<std::vector<int>> sorted = keys;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<std::int8_t> ranks_sorted;
        for (int v = 0; v < n; ++v) {
            rank[static_cast<std::size_t>(v)] = static_cast<std::int8_t>(
                std::lower_bound(sorted.begin(), sorted.end(), keys[static_cast<std::size_t>(v)]) -
                sorted.begin());
            ranks_sorted.push_back(rank[static_cast<std::size_t>(v)]);
        }
        std::sort(ranks_sorted.begin(), ranks_sorted.end());
        for (int p = 0; p < n; ++p)
            rank_at_pos[static_cast<std::size_t>(p)] = ranks_sorted[static_cast<std::size_t>(p)];
    }

    int find(int v) {
        while (uf[static_cast<std::size_t>(v)] != v) {
            uf[static_cast<std::size_t>(v)] =
                uf[static_cast<std::size_t>(uf[static_cast<std::size_t>(v)])];
            v = uf[static_cast<std::size_t>(v)];
        }
        return v;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        uf[static_cast<std::size_t>(b)] = static_cast<std::int8_t>(a);
    }

    void leaf(std::uint64_t code) {
        if (!have_best || code < best) {
            have_best = true;
            best = code;
            best_order = order;
            return;
        }
        // code == best (greater codes are pruned upstream): an automorphism
        bool identity = true;
        Permutation a{};
        for (int p = 0; p < n; ++p) {
            a[static_cast<std::size_t>(best_order[static_cast<std::size_t>(p)])] =
                order[static_cast<std::size_t>(p)];
            identity &= best_order[static_cast<std::size_t>(p)] == order[static_cast<std::size_t>(p)];
        }
        if (identity) return;
        for (int v = 0; v < n; ++v) unite(v, a[static_cast<std::size_t>(v)]);
        if (collect) automorphisms.push_back(a);
    }

    void descend(int pos, std::uint64_t code, int bits, std::uint64_t used) {
        if (pos == n) {
            leaf(code);
            return;
        }
        for (int v = 0; v < n; ++v) {
            if ((used >> v) & 1) continue;
            if (rank[static_cast<std::size_t>(v)] != rank_at_pos[static_cast<std::size_t>(pos)])
                continue;
            const std::uint64_t row = adj[static_cast<std::size_t>(v)];
            std::uint64_t col = 0;
            for (int j = 0; j < pos; ++j)
                col = (col << 1) | ((row >> order[static_cast<std::size_t>(j)]) & 1);
            const std::uint64_t next = (code << pos) | col;
            const int next_bits = bits + pos;
            // prune against the current best's prefix; ties must be explored
            // so that every minimal leaf (hence every automorphism) is seen
            if (have_best && next > (best >> (total_bits - next_bits))) continue;
            order[static_cast<std::size_t>(pos)] = static_cast<std::int8_t>(v);
            descend(pos + 1, next, next_bits, used | (std::uint64_t{1} << v));
        }
    }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g, bool collect_automorphisms) {
    if (g.order() < 1 || g.order() > max_canon_vertices)
        throw precondition_error("canonical_form: order outside [1," +
                                 std::to_string(max_canon_vertices) + "]");
    LabelSearch search(g, collect_automorphisms);
    search.descend(0, 0, 0, 0);
    CanonicalForm out;
    out.code = search.best;
    out.order = search.best_order;
    for (int v = 0; v < g.order(); ++v)
        out.orbit[static_cast<std::size_t>(v)] = static_cast<std::int8_t>(search.find(v));
    out.automorphisms = std::move(search.automorphisms);
    return out;
}

}  // namespace p3iso
