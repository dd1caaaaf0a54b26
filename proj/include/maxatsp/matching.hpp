#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "maxatsp/graph.hpp"

namespace maxatsp {

struct MatchingEdge {
    int a = 0, b = 0;
    int64_t w = 0;  // scaled; may be negative (gadget adjustments)
};

// Undirected matching instance. No parallel edges, no self-loops.
struct MatchingInstance {
    int num_vertices = 0;
    std::vector<MatchingEdge> edges;
};

struct Matching {
    std::vector<std::pair<int, int>> pairs;  // each pair (a,b) with a < b
    int64_t weight = 0;
};

struct MatchingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Max-weight perfect matching on the bipartite doubling {u_out} x {v_in} of a
// complete digraph; diagonal forbidden. Pair (u, n+v) encodes succ(u) = v.
// Its weight equals the maximum cycle-cover weight.
Matching assignment_max(const Digraph& g);

std::vector<int> succ_from_assignment(const Matching& m, int n);

// Max-weight perfect matching in a general graph. Throws MatchingError if no
// perfect matching exists (odd vertex count included).
Matching blossom_max_perfect(const MatchingInstance& inst);

// Max-weight (not necessarily perfect) matching; used by the rank-maximal
// reduction and handy for tests.
Matching blossom_max_weight(const MatchingInstance& inst);

struct RankedEdge {
    int a = 0, b = 0;
    int rank = 1;  // 1 = best
};

// Number of matched edges of each rank, entry [0] = rank 1. Trailing zeros
// trimmed; lexicographically larger signature = better matching.
std::vector<int> rank_signature(const std::vector<RankedEdge>& edges,
                                const std::vector<std::pair<int, int>>& pairs);

// Rank-maximal matching via the weight-scaling reduction: rank i maps to
// weight M^(k-i) with M = |E|+1 in big-integer arithmetic, then one
// max-weight matching run decides everything.
Matching rank_maximal(int num_vertices, const std::vector<RankedEdge>& edges);

}  // namespace maxatsp
