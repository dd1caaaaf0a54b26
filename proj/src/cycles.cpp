#include "maxatsp/cycles.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

#include "maxatsp/matching.hpp"

namespace maxatsp {

const char* cycle_kind_name(CycleKind kind) {
  switch (kind) {
    case CycleKind::plain: return "plain";
    case CycleKind::hard_2cycle: return "hard-2cycle";
    case CycleKind::hard_triangle: return "hard-triangle";
    case CycleKind::tricky_2cycle: return "tricky-2cycle";
    case CycleKind::tricky_3triangle: return "tricky-3triangle";
    case CycleKind::tricky_2triangle: return "tricky-2triangle";
  }
  return "unknown";
}

CycleCover compute_cmax(const Digraph& g) {
  assert(g.n() >= 2);
  Matching m = assignment_max(g);
  return cover_from_succ(succ_from_assignment(m, g.n()), g);
}

namespace {

int64_t cycle_weight(const Digraph& g, const std::vector<int>& cycle) {
  int64_t w = 0;
  for (size_t i = 0; i < cycle.size(); ++i)
    w += g.w(cycle[i], cycle[(i + 1) % cycle.size()]);
  return w;
}

std::vector<int> pred_of(const std::vector<int>& succ) {
  std::vector<int> pred(succ.size());
  for (size_t u = 0; u < succ.size(); ++u) pred[succ[u]] = static_cast<int>(u);
  return pred;
}

// Length of the cover cycle through each vertex.
std::vector<int> cycle_len_of(const CycleCover& cmax, int n) {
  std::vector<int> len(n, 0);
  for (const auto& cyc : cmax.cycles)
    for (int v : cyc) len[v] = static_cast<int>(cyc.size());
  return len;
}

}  // namespace

bool is_hard_cycle(const Digraph& g, const std::vector<int>& cycle) {
  if (cycle.size() != 2 && cycle.size() != 3) return false;
  int64_t wc = cycle_weight(g, cycle);
  for (size_t i = 0; i < cycle.size(); ++i) {
    int64_t we = g.w(cycle[i], cycle[(i + 1) % cycle.size()]);
    if (10 * we <= 3 * wc) return false;
  }
  return true;
}

std::vector<CycleClass> classify_hard(const CycleCover& cmax, const Digraph& g) {
  std::vector<CycleClass> out;
  for (const auto& cyc : cmax.cycles) {
    if (!is_hard_cycle(g, cyc)) continue;
    CycleClass cc;
    cc.cycle = cyc;
    cc.kind = cyc.size() == 2 ? CycleKind::hard_2cycle : CycleKind::hard_triangle;
    out.push_back(std::move(cc));
  }
  return out;
}

bool is_incorrigible_2cycle(const CycleCover& cmax, const Digraph& g, int u, int v) {
  if (cmax.succ[u] != v) return false;
  if (cmax.succ[v] == u) return false;  // both edges covered, not a candidate
  std::vector<int> len = cycle_len_of(cmax, g.n());
  if (len[u] <= 3) return false;  // inside a triangle of the cover
  std::vector<int> pred = pred_of(cmax.succ);
  int64_t s = g.w(pred[u], u) + g.w(v, cmax.succ[v]);
  return 4 * g.w(u, v) > 3 * s && 4 * g.w(v, u) > 3 * s;
}

std::vector<CycleClass> classify_tricky_2cycles(const CycleCover& cmax, const Digraph& g) {
  const int n = g.n();
  std::vector<int> pred = pred_of(cmax.succ);
  std::vector<int> len = cycle_len_of(cmax, n);

  std::vector<CycleClass> out;
  for (const auto& cyc : cmax.cycles) {
    if (cyc.size() != 2 || !is_hard_cycle(g, cyc)) continue;
    CycleClass cc;
    cc.cycle = cyc;
    cc.kind = CycleKind::tricky_2cycle;
    out.push_back(std::move(cc));
  }

  // Incorrigible 2-cycles: (u,v) covered, (v,u) not, and both directions
  // outweigh 3/4 of the adjacent cover edges. Cycles lying inside a cover
  // triangle are handled by the triangle classification instead.
  struct Incor {
    int u, v;
    int64_t wcov;  // weight of the covered edge (u,v)
  };
  std::vector<Incor> incor;
  for (int u = 0; u < n; ++u) {
    int v = cmax.succ[u];
    if (cmax.succ[v] == u || len[u] <= 3) continue;
    int64_t s = g.w(pred[u], u) + g.w(v, cmax.succ[v]);
    if (4 * g.w(u, v) > 3 * s && 4 * g.w(v, u) > 3 * s)
      incor.push_back({u, v, g.w(u, v)});
  }

  // Two incorrigible cycles can share at most one vertex, and each touches
  // at most one other. Of a touching pair only the strictly heavier covered
  // edge survives; a tie eliminates both, since either member can then be
  // repaired at the expense of the other.
  for (size_t i = 0; i < incor.size(); ++i) {
    bool keep = true;
    int touching = 0;
    for (size_t j = 0; j < incor.size(); ++j) {
      if (i == j) continue;
      bool share = incor[i].u == incor[j].u || incor[i].u == incor[j].v ||
                   incor[i].v == incor[j].u || incor[i].v == incor[j].v;
      if (!share) continue;
      ++touching;
      if (incor[i].wcov <= incor[j].wcov) keep = false;
    }
    assert(touching <= 1);
    if (!keep) continue;
    CycleClass cc;
    cc.cycle = {incor[i].u, incor[i].v};
    cc.kind = CycleKind::tricky_2cycle;
    out.push_back(std::move(cc));
  }

#ifndef NDEBUG
  for (size_t i = 0; i < out.size(); ++i)
    for (size_t j = i + 1; j < out.size(); ++j)
      for (int a : out[i].cycle)
        for (int b : out[j].cycle) assert(a != b);
#endif
  return out;
}

namespace {

// Strict frontier for a cover triangle: every edge strictly inside
// (9/31 w(t), 2/5 w(t)) and every two-edge path of the reversed triangle
// strictly below 28/37 w(t). All comparisons in exact integers.
bool tricky_3_bounds(const Digraph& g, int p, int q, int r) {
  int64_t wt = g.w(p, q) + g.w(q, r) + g.w(r, p);
  for (auto [a, b] : {std::pair{p, q}, {q, r}, {r, p}}) {
    int64_t we = g.w(a, b);
    if (31 * we <= 9 * wt) return false;
    if (5 * we >= 2 * wt) return false;
  }
  for (auto [x, y, z] : {std::tuple{q, p, r}, {p, r, q}, {r, q, p}}) {
    if (37 * (g.w(x, y) + g.w(y, z)) >= 28 * wt) return false;
  }
  return true;
}

// Triangle t=(p,q,r) leaning on the cover 2-cycle (q,r), with (q,r) the
// triangle's own side and (r,q) the anti-edge. Tricky when no bounded
// replacement of (r,q) copies by triangle edges reaches the required
// weight, which reduces to the three inequalities below.
bool tricky_2_bounds(const Digraph& g, int p, int q, int r) {
  int64_t wqr = g.w(q, r), wrq = g.w(r, q);
  int64_t wt = g.w(p, q) + wqr + g.w(r, p);
  if (2 * wrq <= wt) return false;
  if (2 * wrq <= 3 * wqr) return false;
  int64_t delta2 = 2 * wrq - 3 * wqr;  // twice delta
  int64_t side_min = std::min(g.w(p, q), g.w(r, p));
  // min side > (3/5) delta + w(q,r)/2, scaled through by 10
  if (10 * side_min <= 3 * delta2 + 5 * wqr) return false;
  // w(q,r) >= w(t)/3 - eps with eps = w(r,q) - w(t)/2 simplifies to
  // 6 (w(q,r) + w(r,q)) >= 5 w(t)
  if (6 * (wqr + wrq) < 5 * wt) return false;
  return true;
}

CycleClass make_tricky_2triangle(const Digraph& g, int p, int q, int r) {
  CycleClass cc;
  cc.cycle = {p, q, r};
  cc.kind = CycleKind::tricky_2triangle;
  cc.tpoint = p;
  cc.tcycle = std::make_pair(q, r);
  int64_t wqr = g.w(q, r), wrq = g.w(r, q);
  assert(wrq % 10 == 0 && (3 * wqr) % 2 == 0);
  cc.kappa = wrq / 10;
  cc.delta = wrq - (3 * wqr) / 2;
  cc.wprime = wqr + *cc.delta;
  return cc;
}

}  // namespace

std::vector<CycleClass> classify_tricky_triangles(const CycleCover& cmax, const Digraph& g) {
  const int n = g.n();
  std::vector<CycleClass> out;
  for (const auto& cyc : cmax.cycles) {
    if (cyc.size() == 3 && tricky_3_bounds(g, cyc[0], cyc[1], cyc[2])) {
      CycleClass cc;
      cc.cycle = cyc;
      cc.kind = CycleKind::tricky_3triangle;
      out.push_back(std::move(cc));
    }
    if (cyc.size() != 2) continue;
    // Either orientation of the covered 2-cycle can serve as the triangle
    // side, but the anti-edge must outweigh 3/2 of the side, so at most
    // one orientation admits tricky triangles.
    for (auto [q, r] : {std::pair{cyc[0], cyc[1]}, {cyc[1], cyc[0]}}) {
      for (int p = 0; p < n; ++p) {
        if (p == q || p == r) continue;
        if (tricky_2_bounds(g, p, q, r)) out.push_back(make_tricky_2triangle(g, p, q, r));
      }
    }
  }
  return out;
}

std::vector<std::vector<EdgeBundle>> rejected_triangle_replacements(
    const Digraph& g, const std::vector<int>& tri) {
  assert(tri.size() == 3);
  int p = tri[0], q = tri[1], r = tri[2];
  int64_t wt = g.w(p, q) + g.w(q, r) + g.w(r, p);
  std::vector<std::vector<EdgeBundle>> out;

  bool edge_bound_failed = false;
  for (auto [a, b] : {std::pair{p, q}, {q, r}, {r, p}}) {
    int64_t we = g.w(a, b);
    if (31 * we <= 9 * wt || 5 * we >= 2 * wt) edge_bound_failed = true;
  }
  if (edge_bound_failed) {
    // 20 copies of the heaviest side, 17 of the middle one, 3 of the
    // lightest. Whichever bound failed, this bundle reaches 14 w(t).
    std::vector<std::pair<int, int>> sides = {{p, q}, {q, r}, {r, p}};
    std::stable_sort(sides.begin(), sides.end(), [&](auto x, auto y) {
      return g.w(x.first, x.second) > g.w(y.first, y.second);
    });
    out.push_back({{sides[0].first, sides[0].second, 20},
                   {sides[1].first, sides[1].second, 17},
                   {sides[2].first, sides[2].second, 3}});
  }

  for (auto [x, y, z] : {std::tuple{q, p, r}, {p, r, q}, {r, q, p}}) {
    if (37 * (g.w(x, y) + g.w(y, z)) < 28 * wt) continue;
    // Overweight two-edge path against the triangle's orientation: 20
    // copies of its heavier edge and 17 of the lighter one suffice.
    if (g.w(x, y) >= g.w(y, z))
      out.push_back({{x, y, 20}, {y, z, 17}});
    else
      out.push_back({{x, y, 17}, {y, z, 20}});
  }
  return out;
}

std::pair<TrickyGraphH, RepresentativeSet> build_H_and_R(const std::vector<CycleClass>& trickies) {
  TrickyGraphH h;
  std::map<std::pair<int, int>, int> cycle_index;
  std::map<int, int> point_index;
  std::vector<int64_t> cycle_wprime;
  std::map<std::pair<int, int>, int> seen_pairs;

  for (size_t i = 0; i < trickies.size(); ++i) {
    const CycleClass& t = trickies[i];
    if (t.kind != CycleKind::tricky_2triangle) continue;
    assert(t.tcycle && t.tpoint && t.wprime);
    auto [it, fresh] = cycle_index.try_emplace(*t.tcycle, static_cast<int>(h.tcycles.size()));
    if (fresh) {
      h.tcycles.push_back(*t.tcycle);
      cycle_wprime.push_back(*t.wprime);
    } else {
      // Every triangle over the same covered 2-cycle sees the same w'.
      assert(cycle_wprime[it->second] == *t.wprime);
    }
    auto [pt, pfresh] = point_index.try_emplace(*t.tpoint, static_cast<int>(h.tpoints.size()));
    if (pfresh) h.tpoints.push_back(*t.tpoint);

    auto [se, efresh] = seen_pairs.try_emplace({it->second, pt->second}, static_cast<int>(i));
    assert(efresh);
    (void)se;
    h.edges.push_back({it->second, pt->second, 0, static_cast<int>(i)});
  }

  // Ranks follow the strictly decreasing order of distinct w' values.
  std::vector<int64_t> distinct = cycle_wprime;
  std::sort(distinct.begin(), distinct.end(), std::greater<>());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  for (auto& e : h.edges) {
    int64_t wp = cycle_wprime[e.cycle_index];
    auto pos = std::lower_bound(distinct.begin(), distinct.end(), wp, std::greater<>());
    e.rank = static_cast<int>(pos - distinct.begin()) + 1;
  }

  RepresentativeSet rep;
  if (!h.edges.empty()) {
    int nc = static_cast<int>(h.tcycles.size());
    int np = static_cast<int>(h.tpoints.size());
    std::vector<RankedEdge> redges;
    redges.reserve(h.edges.size());
    for (const auto& e : h.edges) redges.push_back({e.cycle_index, nc + e.point_index, e.rank});
    Matching nmatch = rank_maximal(nc + np, redges);
    for (auto [a, b] : nmatch.pairs) {
      auto it = seen_pairs.find({a, b - nc});
      assert(it != seen_pairs.end());
      rep.triangles.push_back(trickies[it->second]);
    }
  }
  return {h, rep};
}

}  // namespace maxatsp
