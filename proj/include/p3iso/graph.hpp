#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace p3iso {

// Malformed external input (graph6 bytes, label lists).
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A documented operation precondition does not hold for the given input.
struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A certification/invariant check failed; indicates a bug, never bad input.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Bitrow adjacency caps the order at one machine word; graph6 short form
// caps it at 62, which also covers every construction this project builds.
inline constexpr int max_vertices = 62;

// Subset of vertex labels 0..61 as a bitmask.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }
    static constexpr VertexSet first_n(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }
    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.add(v);
        return s;
    }

    constexpr bool contains(int v) const { return (bits_ >> v) & 1; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int count() const { return std::popcount(bits_); }
    constexpr std::uint64_t bits() const { return bits_; }
    // Smallest member, -1 if empty.
    constexpr int lowest() const { return bits_ ? std::countr_zero(bits_) : -1; }

    void add(int v) { bits_ |= std::uint64_t{1} << v; }
    void remove(int v) { bits_ &= ~(std::uint64_t{1} << v); }
    constexpr VertexSet with(int v) const { return VertexSet(bits_ | (std::uint64_t{1} << v)); }
    constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    // Set difference.
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    constexpr bool operator==(const VertexSet&) const = default;

    constexpr bool is_subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }

    // Visits members in ascending label order.
    template <typename F>
    void for_each(F&& f) const {
        for (std::uint64_t b = bits_; b; b &= b - 1) f(std::countr_zero(b));
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

private:
    std::uint64_t bits_ = 0;
};

// Immutable simple undirected graph on dense labels 0..n-1.
// Invariants: no self-loops, symmetric adjacency, rows confined to 0..n-1.
class Graph {
public:
    Graph() = default;

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
    static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
        return from_edges(n, std::vector<std::pair<int, int>>(edges));
    }
    // Adopts prebuilt rows; validates the simple-graph invariants.
    static Graph from_adjacency(int n, std::vector<VertexSet> rows);

    int order() const { return n_; }
    VertexSet vertices() const { return VertexSet::first_n(n_); }
    VertexSet neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    VertexSet closed_neighbors(int v) const { return neighbors(v).with(v); }
    bool adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u)].contains(v); }
    int degree(int v) const { return adj_[static_cast<std::size_t>(v)].count(); }
    // 0 on the empty graph.
    int max_degree() const;
    int min_degree() const;
    int edge_count() const;
    std::vector<std::pair<int, int>> edges() const;
    bool connected() const;

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::vector<VertexSet> adj_;
};

struct DeletionResult {
    Graph graph;
    std::vector<int> old_label;  // old_label[new] = original label

    VertexSet to_original(VertexSet local) const {
        VertexSet out;
        local.for_each([&](int v) { out.add(old_label[static_cast<std::size_t>(v)]); });
        return out;
    }
};

// N[X]: X together with every neighbor of X.
VertexSet closed_neighborhood(const Graph& g, VertexSet x);
// N(X) = N[X] \ X.
VertexSet open_neighborhood(const Graph& g, VertexSet x);

// Induced subgraph on V(g) \ x, densely relabeled in ascending original order.
DeletionResult remove_vertices(const Graph& g, VertexSet x);
// G - N[D], the residual graph after deleting a closed neighborhood.
DeletionResult delete_closed_neighborhood(const Graph& g, VertexSet d);

// Connected components ordered by smallest original label.
std::vector<DeletionResult> components(const Graph& g);

// graph6 short form (n <= 62), one graph per line of text.
Graph parse_graph6(std::string_view line);
std::string to_graph6(const Graph& g);

}  // namespace p3iso
