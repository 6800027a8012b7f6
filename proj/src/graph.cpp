#include "p3iso/graph.hpp"

#include <algorithm>
#include <array>

namespace p3iso {

namespace {

void require_label(int v, int n, const char* what) {
    if (v < 0 || v >= n)
        throw precondition_error(std::string(what) + ": label " + std::to_string(v) +
                                 " out of range [0," + std::to_string(n) + ")");
}

void require_order(int n) {
    if (n < 0 || n > max_vertices)
        throw precondition_error("graph order " + std::to_string(n) + " outside [0," +
                                 std::to_string(max_vertices) + "]");
}

void require_valid_subset(const Graph& g, VertexSet x, const char* what) {
    if (!x.is_subset_of(g.vertices()))
        throw precondition_error(std::string(what) + ": vertex set has members >= order " +
                                 std::to_string(g.order()));
}

}  // namespace

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    require_order(n);
    std::vector<VertexSet> rows(static_cast<std::size_t>(n));
    for (auto [u, v] : edges) {
        require_label(u, n, "from_edges");
        require_label(v, n, "from_edges");
        if (u == v) throw precondition_error("from_edges: self-loop at " + std::to_string(u));
        rows[static_cast<std::size_t>(u)].add(v);  // duplicates collapse
        rows[static_cast<std::size_t>(v)].add(u);
    }
    Graph g;
    g.n_ = n;
    g.adj_ = std::move(rows);
    return g;
}

Graph Graph::from_adjacency(int n, std::vector<VertexSet> rows) {
    require_order(n);
    if (rows.size() != static_cast<std::size_t>(n))
        throw internal_error("from_adjacency: row count mismatch");
    const VertexSet all = VertexSet::first_n(n);
    for (int v = 0; v < n; ++v) {
        const VertexSet row = rows[static_cast<std::size_t>(v)];
        if (!row.is_subset_of(all)) throw internal_error("from_adjacency: row exceeds order");
        if (row.contains(v)) throw internal_error("from_adjacency: self-loop");
        row.for_each([&](int u) {
            if (!rows[static_cast<std::size_t>(u)].contains(v))
                throw internal_error("from_adjacency: asymmetric adjacency");
        });
    }
    Graph g;
    g.n_ = n;
    g.adj_ = std::move(rows);
    return g;
}

int Graph::max_degree() const {
    int d = 0;
    for (const VertexSet& row : adj_) d = std::max(d, row.count());
    return d;
}

int Graph::min_degree() const {
    if (n_ == 0) return 0;
    int d = max_vertices + 1;
    for (const VertexSet& row : adj_) d = std::min(d, row.count());
    return d;
}

int Graph::edge_count() const {
    int twice = 0;
    for (const VertexSet& row : adj_) twice += row.count();
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < n_; ++v)
        (neighbors(v) - VertexSet::first_n(v + 1)).for_each([&](int u) {
            out.emplace_back(v, u);
        });
    return out;
}

bool Graph::connected() const {
    if (n_ <= 1) return true;
    VertexSet reached = VertexSet::single(0);
    VertexSet frontier = reached;
    while (!frontier.empty()) {
        VertexSet next;
        frontier.for_each([&](int v) { next |= neighbors(v); });
        frontier = next - reached;
        reached |= next;
    }
    return reached == vertices();
}

VertexSet closed_neighborhood(const Graph& g, VertexSet x) {
    require_valid_subset(g, x, "closed_neighborhood");
    VertexSet out = x;
    x.for_each([&](int v) { out |= g.neighbors(v); });
    return out;
}

VertexSet open_neighborhood(const Graph& g, VertexSet x) {
    return closed_neighborhood(g, x) - x;
}

DeletionResult remove_vertices(const Graph& g, VertexSet x) {
    require_valid_subset(g, x, "remove_vertices");
    const VertexSet keep = g.vertices() - x;
    std::vector<int> old_label = keep.to_vector();
    const int m = static_cast<int>(old_label.size());
    std::array<int, max_vertices> to_new{};
    for (int i = 0; i < m; ++i) to_new[static_cast<std::size_t>(old_label[i])] = i;
    std::vector<VertexSet> rows(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        VertexSet row;
        (g.neighbors(old_label[static_cast<std::size_t>(i)]) & keep).for_each([&](int u) {
            row.add(to_new[static_cast<std::size_t>(u)]);
        });
        rows[static_cast<std::size_t>(i)] = row;
    }
    return DeletionResult{Graph::from_adjacency(m, std::move(rows)), std::move(old_label)};
}

DeletionResult delete_closed_neighborhood(const Graph& g, VertexSet d) {
    require_valid_subset(g, d, "delete_closed_neighborhood");
    return remove_vertices(g, closed_neighborhood(g, d));
}

std::vector<DeletionResult> components(const Graph& g) {
    std::vector<DeletionResult> out;
    VertexSet unseen = g.vertices();
    while (!unseen.empty()) {
        VertexSet comp = VertexSet::single(unseen.lowest());
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next;
            frontier.for_each([&](int v) { next |= g.neighbors(v); });
            frontier = next - comp;
            comp |= next;
        }
        out.push_back(remove_vertices(g, g.vertices() - comp));
        unseen = unseen - comp;
    }
    return out;
}

// graph6 layout: byte 63+n, then ceil(n(n-1)/2 / 6) bytes of 63 + 6-bit
// groups covering the upper triangle column by column, first bit most
// significant, zero padding at the end.

Graph parse_graph6(std::string_view line) {
    if (line.empty()) throw parse_error("graph6: empty line");
    const unsigned char head = static_cast<unsigned char>(line[0]);
    if (head == 126) throw parse_error("graph6: long form (n > 62) unsupported");
    if (head < 63 || head > 125) throw parse_error("graph6: bad order byte");
    const int n = head - 63;
    const int nbits = n * (n - 1) / 2;
    const std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
    if (line.size() != 1 + nbytes)
        throw parse_error("graph6: length mismatch for order " + std::to_string(n));
    std::vector<VertexSet> rows(static_cast<std::size_t>(n));
    int bit = 0;
    for (std::size_t i = 0; i < nbytes; ++i) {
        const unsigned char c = static_cast<unsigned char>(line[1 + i]);
        if (c < 63 || c > 126) throw parse_error("graph6: malformed byte");
        const int group = c - 63;
        for (int k = 5; k >= 0; --k, ++bit) {
            const bool set = (group >> k) & 1;
            if (bit >= nbits) {
                if (set) throw parse_error("graph6: nonzero padding");
                continue;
            }
            if (!set) continue;
            // bit index -> pair (j, col) with j < col, column-major order
            int col = 1;
            int base = 0;
            while (base + col <= bit) base += col++;
            const int j = bit - base;
            rows[static_cast<std::size_t>(col)].add(j);
            rows[static_cast<std::size_t>(j)].add(col);
        }
    }
    return Graph::from_adjacency(n, std::move(rows));
}

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    int group = 0;
    int filled = 0;
    for (int col = 1; col < n; ++col)
        for (int j = 0; j < col; ++j) {
            group = (group << 1) | (g.adjacent(j, col) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + group));
                group = 0;
                filled = 0;
            }
        }
    if (filled) out.push_back(static_cast<char>(63 + (group << (6 - filled))));
    return out;
}

}  // namespace p3iso
