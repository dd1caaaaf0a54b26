#include "maxatsp/matching.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <limits>
#include <map>

#include "maxatsp/blossom.hpp"

namespace maxatsp {

namespace {

constexpr int64_t kForbidden = (int64_t)1 << 50;

// Jonker-Volgenant style shortest augmenting path assignment, minimization
// on a dense cost matrix.
std::vector<int> solve_assignment_min(const std::vector<std::vector<int64_t>>& cost) {
    int n = static_cast<int>(cost.size());
    std::vector<int64_t> u(n + 1, 0), v(n + 1, 0);
    std::vector<int> p(n + 1, 0), way(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<int64_t> minv(n + 1, std::numeric_limits<int64_t>::max());
        std::vector<char> used(n + 1, 0);
        do {
            used[j0] = 1;
            int i0 = p[j0], j1 = -1;
            int64_t delta = std::numeric_limits<int64_t>::max();
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                int64_t cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0);
    }
    std::vector<int> row_to_col(n, -1);
    for (int j = 1; j <= n; ++j)
        if (p[j] > 0) row_to_col[p[j] - 1] = j - 1;
    return row_to_col;
}

}  // namespace

Matching assignment_max(const Digraph& g) {
    int n = g.n();
    int64_t wmax = 0;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) wmax = std::max(wmax, g.w(u, v));
    std::vector<std::vector<int64_t>> cost(n, std::vector<int64_t>(n));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            cost[u][v] = u == v ? kForbidden : wmax - g.w(u, v);
    auto succ = solve_assignment_min(cost);
    Matching m;
    for (int u = 0; u < n; ++u) {
        m.pairs.emplace_back(u, n + succ[u]);
        m.weight += g.w(u, succ[u]);
    }
    return m;
}

std::vector<int> succ_from_assignment(const Matching& m, int n) {
    std::vector<int> succ(n, -1);
    for (auto [a, b] : m.pairs) succ[a] = b - n;
    return succ;
}

namespace {

void validate_instance(const MatchingInstance& inst) {
    std::map<std::pair<int, int>, int> seen;
    for (const auto& e : inst.edges) {
        if (e.a == e.b) throw MatchingError("self-loop in matching instance");
        if (e.a < 0 || e.b < 0 || e.a >= inst.num_vertices || e.b >= inst.num_vertices)
            throw MatchingError("vertex id out of range");
        auto key = std::minmax(e.a, e.b);
        if (++seen[{key.first, key.second}] > 1)
            throw MatchingError("parallel edge in matching instance");
    }
}

template <typename W>
Matching run_blossom(const MatchingInstance& inst, const std::vector<W>& weights,
                     bool max_cardinality) {
    std::vector<typename Blossom<W>::Edge> edges;
    edges.reserve(inst.edges.size());
    for (size_t k = 0; k < inst.edges.size(); ++k)
        edges.push_back({inst.edges[k].a, inst.edges[k].b, weights[k]});
    Blossom<W> solver(inst.num_vertices, std::move(edges), max_cardinality);
    auto mate = solver.solve();
    Matching m;
    for (int v = 0; v < inst.num_vertices; ++v)
        if (mate[v] > v) m.pairs.emplace_back(v, mate[v]);
    return m;
}

int64_t matched_weight(const MatchingInstance& inst, const Matching& m) {
    std::map<std::pair<int, int>, int64_t> wt;
    for (const auto& e : inst.edges) {
        auto key = std::minmax(e.a, e.b);
        wt[{key.first, key.second}] = e.w;
    }
    int64_t total = 0;
    for (const auto& pr : m.pairs) total += wt.at(pr);
    return total;
}

}  // namespace

Matching blossom_max_perfect(const MatchingInstance& inst) {
    validate_instance(inst);
    if (inst.num_vertices % 2 != 0) throw MatchingError("odd vertex count, no perfect matching");
    // Shift weights so every edge is nonnegative; with max-cardinality mode
    // the shift does not change which perfect matching wins.
    int64_t shift = 0;
    for (const auto& e : inst.edges) shift = std::min(shift, e.w);
    std::vector<int64_t> weights;
    weights.reserve(inst.edges.size());
    for (const auto& e : inst.edges) weights.push_back(e.w - shift);
    Matching m = run_blossom<int64_t>(inst, weights, true);
    if (static_cast<int>(m.pairs.size()) * 2 != inst.num_vertices)
        throw MatchingError("no perfect matching exists");
    m.weight = matched_weight(inst, m);
    return m;
}

Matching blossom_max_weight(const MatchingInstance& inst) {
    validate_instance(inst);
    std::vector<int64_t> weights;
    weights.reserve(inst.edges.size());
    for (const auto& e : inst.edges) weights.push_back(e.w);
    Matching m = run_blossom<int64_t>(inst, weights, false);
    m.weight = matched_weight(inst, m);
    return m;
}

std::vector<int> rank_signature(const std::vector<RankedEdge>& edges,
                                const std::vector<std::pair<int, int>>& pairs) {
    std::map<std::pair<int, int>, int> rank_of;
    for (const auto& e : edges) {
        auto key = std::minmax(e.a, e.b);
        rank_of[{key.first, key.second}] = e.rank;
    }
    std::vector<int> sig;
    for (const auto& pr : pairs) {
        auto key = std::minmax(pr.first, pr.second);
        int r = rank_of.at({key.first, key.second});
        if (static_cast<int>(sig.size()) < r) sig.resize(r, 0);
        ++sig[r - 1];
    }
    while (!sig.empty() && sig.back() == 0) sig.pop_back();
    return sig;
}

Matching rank_maximal(int num_vertices, const std::vector<RankedEdge>& edges) {
    using boost::multiprecision::cpp_int;
    if (edges.empty()) return {};
    int maxrank = 0;
    for (const auto& e : edges) {
        if (e.rank < 1) throw MatchingError("ranks must be positive");
        maxrank = std::max(maxrank, e.rank);
    }
    cpp_int M = static_cast<int64_t>(edges.size()) + 1;
    std::vector<cpp_int> pw(maxrank + 1);
    pw[0] = 1;
    for (int i = 1; i <= maxrank; ++i) pw[i] = pw[i - 1] * M;

    MatchingInstance inst;
    inst.num_vertices = num_vertices;
    std::vector<cpp_int> weights;
    for (const auto& e : edges) {
        inst.edges.push_back({e.a, e.b, 0});
        weights.push_back(pw[maxrank - e.rank]);
    }
    std::vector<typename Blossom<cpp_int>::Edge> bedges;
    for (size_t k = 0; k < inst.edges.size(); ++k)
        bedges.push_back({inst.edges[k].a, inst.edges[k].b, weights[k]});
    Blossom<cpp_int> solver(num_vertices, std::move(bedges), false);
    auto mate = solver.solve();
    Matching m;
    for (int v = 0; v < num_vertices; ++v)
        if (mate[v] > v) m.pairs.emplace_back(v, mate[v]);
    return m;
}

}  // namespace maxatsp
