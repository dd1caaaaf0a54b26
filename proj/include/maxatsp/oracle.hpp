#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "maxatsp/graph.hpp"
#include "maxatsp/matching.hpp"

namespace maxatsp {

constexpr int kHeldKarpCap = 15;

// Exact Max ATSP by subset dynamic programming; n capped at kHeldKarpCap.
int64_t held_karp_opt(const Digraph& g);
Tour held_karp_tour(const Digraph& g);

// Exact maximum over all tours by factorial enumeration; n <= 10. A second,
// dumber route than Held-Karp so the two can cross-check each other.
int64_t brute_force_tour_opt(const Digraph& g);

// Exact maximum cycle-cover weight over all fixed-point-free permutations.
int64_t brute_force_cover_opt(const Digraph& g);

// Exact max-weight perfect matching weight by enumeration; empty optional if
// no perfect matching exists.
std::optional<int64_t> brute_force_perfect_matching(const MatchingInstance& inst);

// Lexicographically best rank signature over all matchings of the instance.
std::vector<int> brute_force_rank_signature(int num_vertices,
                                            const std::vector<RankedEdge>& edges);

// Shortest superstring by permutation enumeration (inputs deduplicated and
// substring-filtered first); exact for small m.
std::string brute_force_superstring(const std::vector<std::string>& strings);

// Max total overlap achievable by any ordering = Sum|s_i| - |shortest|.
int64_t brute_force_max_compression(const std::vector<std::string>& strings);

}  // namespace maxatsp
