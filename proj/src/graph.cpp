#include "maxatsp/graph.hpp"

#include <cctype>
#include <sstream>

#include "maxatsp/rng.hpp"

namespace maxatsp {

int64_t tour_weight(const std::vector<int>& order, const Digraph& g) {
    int64_t total = 0;
    for (size_t i = 0; i < order.size(); ++i)
        total += g.w(order[i], order[(i + 1) % order.size()]);
    return total;
}

CycleCover cover_from_succ(const std::vector<int>& succ, const Digraph& g) {
    CycleCover c;
    c.succ = succ;
    int n = static_cast<int>(succ.size());
    std::vector<char> seen(n, 0);
    for (int v = 0; v < n; ++v) {
        if (seen[v]) continue;
        std::vector<int> cyc;
        int x = v;
        while (!seen[x]) {
            seen[x] = 1;
            cyc.push_back(x);
            x = succ[x];
        }
        c.cycles.push_back(std::move(cyc));
    }
    for (int v = 0; v < n; ++v) c.weight += g.w(v, succ[v]);
    return c;
}

int64_t cover_weight(const CycleCover& c, const Digraph& g) {
    int64_t total = 0;
    for (const auto& cyc : c.cycles)
        for (size_t i = 0; i < cyc.size(); ++i)
            total += g.w(cyc[i], cyc[(i + 1) % cyc.size()]);
    return total;
}

namespace {

std::vector<std::vector<std::string>> tokenize_lines(std::istream& in) {
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (!toks.empty()) rows.push_back(std::move(toks));
    }
    return rows;
}

int64_t parse_weight(const std::string& tok) {
    if (tok == "-") throw InstanceError("missing off-diagonal entry");
    size_t pos = 0;
    long long v;
    try {
        v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
        throw InstanceError("bad weight token '" + tok + "'");
    }
    if (pos != tok.size()) throw InstanceError("bad weight token '" + tok + "'");
    if (v < 0) throw InstanceError("negative weight");
    return v;
}

Digraph load_matrix(const std::vector<std::vector<std::string>>& rows) {
    long long n;
    try {
        n = std::stoll(rows[0][0]);
    } catch (const std::exception&) {
        throw InstanceError("bad vertex count");
    }
    if (n < 2) throw InstanceError("need at least 2 vertices");
    if (static_cast<long long>(rows.size()) != n + 1) throw InstanceError("non-square matrix");
    Digraph g(static_cast<int>(n));
    for (int u = 0; u < n; ++u) {
        const auto& row = rows[u + 1];
        if (static_cast<long long>(row.size()) != n) throw InstanceError("non-square matrix");
        for (int v = 0; v < n; ++v) {
            if (u == v) {
                if (row[v] != "-") throw InstanceError("diagonal entry must be '-'");
                continue;
            }
            g.set_w(u, v, parse_weight(row[v]) * kScale);
        }
    }
    return g;
}

Digraph load_edge_list(const std::vector<std::vector<std::string>>& rows) {
    struct Arc {
        int u, v;
        int64_t w;
    };
    std::vector<Arc> arcs;
    long long n = 0;
    for (const auto& row : rows) {
        if (row.size() != 3) throw InstanceError("edge-list line needs 'u v w'");
        long long u, v;
        try {
            u = std::stoll(row[0]);
            v = std::stoll(row[1]);
        } catch (const std::exception&) {
            throw InstanceError("bad vertex id");
        }
        if (u < 1 || v < 1) throw InstanceError("vertex ids are 1-based");
        if (u == v) throw InstanceError("self-loop not allowed");
        n = std::max(n, std::max(u, v));
        arcs.push_back({static_cast<int>(u - 1), static_cast<int>(v - 1), parse_weight(row[2])});
    }
    if (n < 2) throw InstanceError("need at least 2 vertices");
    Digraph g(static_cast<int>(n));
    std::vector<char> have(static_cast<size_t>(n) * n, 0);
    for (const auto& a : arcs) {
        size_t idx = static_cast<size_t>(a.u) * n + a.v;
        if (have[idx]) throw InstanceError("duplicate arc");
        have[idx] = 1;
        g.set_w(a.u, a.v, a.w * kScale);
    }
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && !have[static_cast<size_t>(u) * n + v])
                throw InstanceError("missing off-diagonal entry");
    return g;
}

}  // namespace

Digraph load_instance(std::istream& in) {
    auto rows = tokenize_lines(in);
    if (rows.empty()) throw InstanceError("empty instance");
    if (rows[0].size() == 1) return load_matrix(rows);
    return load_edge_list(rows);
}

Digraph load_instance_text(const std::string& text) {
    std::istringstream in(text);
    return load_instance(in);
}

std::string save_instance(const Digraph& g) {
    std::ostringstream out;
    out << g.n() << "\n";
    for (int u = 0; u < g.n(); ++u) {
        for (int v = 0; v < g.n(); ++v) {
            if (v) out << ' ';
            if (u == v)
                out << '-';
            else
                out << g.w(u, v) / kScale;
        }
        out << "\n";
    }
    return out.str();
}

Family family_from_name(const std::string& name) {
    if (name == "uniform") return Family::uniform;
    if (name == "two-cycle-heavy") return Family::two_cycle_heavy;
    if (name == "triangle-heavy") return Family::triangle_heavy;
    throw InstanceError("unknown family '" + name + "'");
}

std::string family_name(Family f) {
    switch (f) {
        case Family::uniform: return "uniform";
        case Family::two_cycle_heavy: return "two-cycle-heavy";
        case Family::triangle_heavy: return "triangle-heavy";
    }
    return "?";
}

Digraph random_instance(int n, int64_t wmax, uint64_t seed, Family family) {
    if (n < 2) throw InstanceError("need at least 2 vertices");
    if (wmax < 0) throw InstanceError("wmax must be nonnegative");
    Rng rng(seed * 0x100000001b3ULL + static_cast<uint64_t>(family) * 0x9e37ULL + n);
    Digraph g(n);

    auto uni = [&](int64_t lo, int64_t hi) {
        if (hi < lo) hi = lo;
        return rng.range(lo, hi) * kScale;
    };

    int64_t base_cap = family == Family::uniform ? wmax : wmax / 2;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) g.set_w(u, v, uni(0, base_cap));
    if (family == Family::uniform || wmax == 0) return g;

    // Shuffled vertex order; plants use disjoint consecutive groups.
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i)]);

    if (family == Family::two_cycle_heavy) {
        int pairs = std::max(1, n / 3);
        for (int k = 0; k + 1 < n && k / 2 < pairs; k += 2) {
            int u = perm[k], v = perm[k + 1];
            // Both arcs land in [0.8, 1.0]*wmax, so min > (3/7)*max: a hard pair.
            g.set_w(u, v, uni(wmax - wmax / 5, wmax));
            g.set_w(v, u, uni(wmax - wmax / 5, wmax));
        }
        return g;
    }

    // triangle-heavy: alternate two plant shapes.
    int triples = std::max(1, n / 4);
    int shape = 0;
    for (int k = 0; k + 2 < n && k / 3 < triples; k += 3, shape ^= 1) {
        int p = perm[k], q = perm[k + 1], r = perm[k + 2];
        if (shape == 0) {
            // Near-equilateral heavy triangle with light opposite arcs; each
            // edge lands in (9/31, 2/5) of the triangle weight and opposite
            // two-edge paths stay short.
            g.set_w(p, q, uni(wmax - wmax / 10, wmax));
            g.set_w(q, r, uni(wmax - wmax / 10, wmax));
            g.set_w(r, p, uni(wmax - wmax / 10, wmax));
            g.set_w(q, p, uni(0, wmax / 5));
            g.set_w(r, q, uni(0, wmax / 5));
            g.set_w(p, r, uni(0, wmax / 5));
        } else {
            // Skewed pattern: a strong 2-cycle (q,r)/(r,q) with w(r,q) well
            // above 1.5*w(q,r), plus a heavy apex p.
            int64_t a = std::max<int64_t>(1, wmax / 3);
            g.set_w(q, r, uni(a - a / 8, a));
            g.set_w(r, q, uni(std::min(wmax, 2 * a - a / 4), wmax));
            g.set_w(p, q, uni(wmax - wmax / 4, wmax));
            g.set_w(r, p, uni(wmax - wmax / 4, wmax));
            g.set_w(q, p, uni(0, wmax / 5));
            g.set_w(p, r, uni(0, wmax / 5));
        }
    }
    return g;
}

}  // namespace maxatsp
