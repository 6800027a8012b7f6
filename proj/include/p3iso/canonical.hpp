#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "p3iso/graph.hpp"

namespace p3iso {

// Canonical labeling by backtracking over vertex orderings: the canonical
// code is the lexicographically smallest upper-triangle bit string over all
// orderings (bit layout identical to graph6), with branches pruned against
// the best prefix found so far. Equal-code leaves yield automorphisms,
// which drive the orbit partition. Adequate for the enumeration range.

inline constexpr int max_canon_vertices = 11;

using Permutation = std::array<std::int8_t, max_canon_vertices>;

struct CanonicalForm {
    std::uint64_t code = 0;
    Permutation order{};  // order[pos] = vertex placed at pos
    Permutation orbit{};  // orbit[v] = smallest vertex in v's automorphism orbit
    // Non-identity automorphisms; filled only when requested. The list
    // contains every automorphism, so it generates the full group.
    std::vector<Permutation> automorphisms;
};

CanonicalForm canonical_form(const Graph& g, bool collect_automorphisms = false);

}  // namespace p3iso
