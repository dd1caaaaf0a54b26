#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace maxatsp {

// Dedupe and drop strings contained in another string; keeps first-seen order.
// Idempotent. Empty strings are dropped (contained in anything).
std::vector<std::string> ssp_normalize(const std::vector<std::string>& strings);

// Length of the longest proper overlap: max k with suffix_k(a) == prefix_k(b).
// For distinct substring-free inputs this is < min(|a|,|b|).
int overlap_length(const std::string& a, const std::string& b);

struct SspResult {
    std::string superstring;
    int64_t compression = 0;     // Sum |s_i| - |superstring| over the normalized set
    int64_t total_length = 0;    // Sum |s_i| over the normalized set
    std::string branch;          // which Max ATSP run produced the kept string
};

// Shortest-superstring front end: overlap digraph -> Max ATSP -> cut the tour
// at a minimum-weight arc -> merge along the path. Runs the tour both on the
// plain overlap digraph and on the sentinel-extended one (an extra vertex with
// zero-weight arcs, making the best tour weigh exactly the best path) and
// keeps the shorter superstring; the sentinel run carries the 0.7 compression
// guarantee.
SspResult ssp_solve(const std::vector<std::string>& strings);

}  // namespace maxatsp
