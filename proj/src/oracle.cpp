#include "maxatsp/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "maxatsp/ssp.hpp"

namespace maxatsp {

namespace {
constexpr int64_t kNegInf = INT64_MIN / 4;
}

int64_t held_karp_opt(const Digraph& g) {
    return held_karp_tour(g).weight;
}

Tour held_karp_tour(const Digraph& g) {
    int n = g.n();
    if (n > kHeldKarpCap) throw InstanceError("instance above Held-Karp cap");
    if (n == 2) {
        return Tour{{0, 1}, g.w(0, 1) + g.w(1, 0)};
    }
    // dp[mask][v]: best path from 0 through mask (mask contains 0 and v),
    // ending at v.
    size_t full = size_t(1) << n;
    std::vector<std::vector<int64_t>> dp(full, std::vector<int64_t>(n, kNegInf));
    std::vector<std::vector<int8_t>> parent(full, std::vector<int8_t>(n, -1));
    dp[1][0] = 0;
    for (size_t mask = 1; mask < full; ++mask) {
        if (!(mask & 1)) continue;
        for (int v = 0; v < n; ++v) {
            if (dp[mask][v] == kNegInf) continue;
            for (int u = 1; u < n; ++u) {
                if (mask & (size_t(1) << u)) continue;
                size_t nmask = mask | (size_t(1) << u);
                int64_t cand = dp[mask][v] + g.w(v, u);
                if (cand > dp[nmask][u]) {
                    dp[nmask][u] = cand;
                    parent[nmask][u] = static_cast<int8_t>(v);
                }
            }
        }
    }
    int64_t best = kNegInf;
    int bestv = -1;
    for (int v = 1; v < n; ++v) {
        int64_t cand = dp[full - 1][v] + g.w(v, 0);
        if (cand > best) {
            best = cand;
            bestv = v;
        }
    }
    Tour t;
    t.weight = best;
    size_t mask = full - 1;
    int v = bestv;
    while (v != -1) {
        t.order.push_back(v);
        int pv = parent[mask][v];
        mask &= ~(size_t(1) << v);
        v = pv;
    }
    std::reverse(t.order.begin(), t.order.end());
    return t;
}

int64_t brute_force_tour_opt(const Digraph& g) {
    int n = g.n();
    if (n > 10) throw InstanceError("instance too large for factorial enumeration");
    std::vector<int> perm(n - 1);
    std::iota(perm.begin(), perm.end(), 1);
    int64_t best = kNegInf;
    do {
        int64_t w = g.w(0, perm[0]);
        for (int i = 0; i + 1 < n - 1; ++i) w += g.w(perm[i], perm[i + 1]);
        w += g.w(perm[n - 2], 0);
        best = std::max(best, w);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

namespace {

void cover_rec(const Digraph& g, std::vector<int>& succ, std::vector<char>& used, int u,
               int64_t acc, int64_t& best) {
    int n = g.n();
    if (u == n) {
        best = std::max(best, acc);
        return;
    }
    for (int v = 0; v < n; ++v) {
        if (v == u || used[v]) continue;
        used[v] = 1;
        succ[u] = v;
        cover_rec(g, succ, used, u + 1, acc + g.w(u, v), best);
        used[v] = 0;
    }
    succ[u] = -1;
}

}  // namespace

int64_t brute_force_cover_opt(const Digraph& g) {
    int n = g.n();
    if (n > 9) throw InstanceError("instance too large for cover enumeration");
    std::vector<int> succ(n, -1);
    std::vector<char> used(n, 0);
    int64_t best = kNegInf;
    cover_rec(g, succ, used, 0, 0, best);
    return best;
}

namespace {

void pm_rec(const std::vector<std::vector<int64_t>>& adj, const std::vector<char>& present,
            std::vector<char>& used, int nv, int64_t acc, bool& any, int64_t& best) {
    int v = 0;
    while (v < nv && used[v]) ++v;
    if (v == nv) {
        any = true;
        best = std::max(best, acc);
        return;
    }
    used[v] = 1;
    for (int u = v + 1; u < nv; ++u) {
        if (used[u] || !present[v * nv + u]) continue;
        used[u] = 1;
        pm_rec(adj, present, used, nv, acc + adj[v][u], any, best);
        used[u] = 0;
    }
    used[v] = 0;
}

}  // namespace

std::optional<int64_t> brute_force_perfect_matching(const MatchingInstance& inst) {
    int nv = inst.num_vertices;
    if (nv % 2 != 0) return std::nullopt;
    std::vector<std::vector<int64_t>> adj(nv, std::vector<int64_t>(nv, 0));
    std::vector<char> present(static_cast<size_t>(nv) * nv, 0);
    for (const auto& e : inst.edges) {
        adj[e.a][e.b] = adj[e.b][e.a] = e.w;
        present[e.a * nv + e.b] = present[e.b * nv + e.a] = 1;
    }
    std::vector<char> used(nv, 0);
    bool any = false;
    int64_t best = kNegInf;
    pm_rec(adj, present, used, nv, 0, any, best);
    if (!any) return std::nullopt;
    return best;
}

namespace {

void match_rec(const std::vector<RankedEdge>& edges, size_t idx, std::vector<char>& used,
               std::vector<int>& sig, std::vector<int>& best) {
    if (idx == edges.size()) {
        auto trimmed = sig;
        while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
        // Lexicographic comparison with implicit zero padding.
        size_t len = std::max(trimmed.size(), best.size());
        for (size_t i = 0; i < len; ++i) {
            int a = i < trimmed.size() ? trimmed[i] : 0;
            int b = i < best.size() ? best[i] : 0;
            if (a > b) {
                best = trimmed;
                return;
            }
            if (a < b) return;
        }
        return;
    }
    const auto& e = edges[idx];
    match_rec(edges, idx + 1, used, sig, best);
    if (!used[e.a] && !used[e.b]) {
        used[e.a] = used[e.b] = 1;
        if (static_cast<int>(sig.size()) < e.rank) sig.resize(e.rank, 0);
        ++sig[e.rank - 1];
        match_rec(edges, idx + 1, used, sig, best);
        --sig[e.rank - 1];
        used[e.a] = used[e.b] = 0;
    }
}

}  // namespace

std::vector<int> brute_force_rank_signature(int num_vertices,
                                            const std::vector<RankedEdge>& edges) {
    std::vector<char> used(num_vertices, 0);
    std::vector<int> sig, best;
    match_rec(edges, 0, used, sig, best);
    return best;
}

std::string brute_force_superstring(const std::vector<std::string>& strings) {
    auto core = ssp_normalize(strings);
    if (core.empty()) return "";
    if (core.size() > 8) throw InstanceError("too many strings for permutation oracle");
    std::vector<int> perm(core.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    bool have = false;
    do {
        std::string s = core[perm[0]];
        for (size_t i = 1; i < perm.size(); ++i) {
            int ov = overlap_length(core[perm[i - 1]], core[perm[i]]);
            s += core[perm[i]].substr(ov);
        }
        if (!have || s.size() < best.size() || (s.size() == best.size() && s < best)) {
            best = s;
            have = true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

int64_t brute_force_max_compression(const std::vector<std::string>& strings) {
    auto core = ssp_normalize(strings);
    int64_t total = 0;
    for (const auto& s : core) total += static_cast<int64_t>(s.size());
    return total - static_cast<int64_t>(brute_force_superstring(strings).size());
}

}  // namespace maxatsp
