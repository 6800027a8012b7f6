#pragma once

#include <functional>
#include <istream>
#include <string>
#include <vector>

#include "p3iso/graph.hpp"

namespace p3iso {

// One representative per isomorphism class of connected n-vertex graphs,
// 1 <= n <= 9. Incremental vertex augmentation with canonical-deletion
// acceptance: a child survives iff its last-added vertex lies in the orbit
// of the canonical deletion vertex, so no global seen-set is needed.
void enumerate_connected(int n, const std::function<void(const Graph&)>& sink);

// Same generator without the connectivity restriction (attachment sets may
// be empty, deletion ignores cut status). Used by the brute-force oracles.
void enumerate_graphs(int n, bool connected_only, const std::function<void(const Graph&)>& sink);

// Parses a newline-delimited graph6 stream, order preserved. Blank lines
// are skipped; a malformed line reports its 1-based line number.
std::vector<Graph> ingest_graph6_stream(std::istream& in);

struct VerificationReport {
    struct Violation {
        std::string claim;
        std::string g6;
        bool operator==(const Violation&) const = default;
    };

    int n = 0;
    long long connected_count = 0;
    long long c6free_count = 0;
    int empirical_f = 0;  // max iota over connected induced-C6-free graphs
    int bound = 0;        // floor((n+1)/4)
    std::vector<std::string> tight_witnesses;  // graphs with iota = (n+1)/4
    std::vector<Violation> violations;
    long long wall_ms = 0;

    bool same_content(const VerificationReport& o) const {
        return n == o.n && connected_count == o.connected_count &&
               c6free_count == o.c6free_count && empirical_f == o.empirical_f &&
               bound == o.bound && tight_witnesses == o.tight_witnesses &&
               violations == o.violations;
    }
};

// Enumerates, filters by absence of induced 6-cycles, and solves each
// survivor within budget floor((n+1)/4). Only counts, f, and witnesses.
VerificationReport compute_f(int n, int jobs = 1);

// compute_f plus the claim checks on every filtered graph: the iota bound,
// the max-degree >= 5 refinement, tight-graph vertex reduction, and the
// certified bounded algorithm. Any failure lands in violations.
std::vector<VerificationReport> verify_theorem(int n_max, int jobs = 1);

// Same checks over an externally supplied catalog (one report per order
// present in the stream; non-connected entries are dropped).
std::vector<VerificationReport> verify_catalog(const std::vector<Graph>& graphs, int jobs = 1);

}  // namespace p3iso
