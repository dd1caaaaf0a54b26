#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "maxatsp/graph.hpp"

namespace maxatsp {

// Classification of the structures in and around a maximum-weight cycle
// cover that block the straightforward "drop the lightest edge of every
// cycle" tour extraction and therefore need special treatment downstream.
enum class CycleKind {
  plain,
  hard_2cycle,
  hard_triangle,
  tricky_2cycle,
  tricky_3triangle,
  tricky_2triangle,
};

const char* cycle_kind_name(CycleKind kind);

struct CycleClass {
  // Vertex sequence. For a tricky 2-triangle this is (p, q, r) where p is
  // the t-point and (q, r) is the 2-cycle of C_max the triangle leans on.
  std::vector<int> cycle;
  CycleKind kind = CycleKind::plain;

  // The fields below are populated for tricky 2-triangles only.
  std::optional<int> tpoint;
  std::optional<std::pair<int, int>> tcycle;
  std::optional<int64_t> kappa;   // w(r,q)/10, scaled
  std::optional<int64_t> delta;   // w(r,q) - (3/2) w(q,r), scaled
  std::optional<int64_t> wprime;  // w(q,r) + delta, scaled
};

// Maximum-weight cycle cover via the assignment relaxation. Requires n >= 2.
CycleCover compute_cmax(const Digraph& g);

// True when every edge of the cycle carries more than 3/10 of the cycle
// weight. Only 2-cycles and triangles can satisfy this.
bool is_hard_cycle(const Digraph& g, const std::vector<int>& cycle);

// Hard 2-cycles and hard triangles of the cover.
std::vector<CycleClass> classify_hard(const CycleCover& cmax, const Digraph& g);

// A 2-cycle (u,v) with exactly one edge (u,v) in C_max, not inside a C_max
// triangle, is incorrigible when both w(u,v) and w(v,u) exceed 3/4 of the
// combined weight of the two C_max edges adjacent to it. No bounded local
// edge replacement can fix such a cycle, so the ones selected here must be
// kept out of the relaxed cover entirely.
bool is_incorrigible_2cycle(const CycleCover& cmax, const Digraph& g, int u, int v);

// Tricky 2-cycles: hard 2-cycles of C_max plus the incorrigible 2-cycles
// that survive the touching-pair selection (of two incorrigibles sharing a
// vertex only the strictly heavier one, measured by its C_max edge, is
// kept). The output is pairwise vertex-disjoint.
std::vector<CycleClass> classify_tricky_2cycles(const CycleCover& cmax, const Digraph& g);

// Tricky triangles of both flavours:
// - a C_max triangle t is tricky when every edge lies strictly between
//   (9/31) w(t) and (2/5) w(t) and every two-edge path of the reversed
//   triangle weighs strictly less than (28/37) w(t);
// - a triangle t=(p,q,r) whose side (q,r) is half of a C_max 2-cycle is
//   tricky when w(r,q) > max{w(t)/2, (3/2) w(q,r)}, both of w(p,q), w(r,p)
//   exceed (3/5) delta + w(q,r)/2, and w(q,r) >= w(t)/3 - eps with
//   eps = w(r,q) - w(t)/2.
// Outside those strict frontiers a weight-sufficient replacement subgraph
// exists, so boundary ties classify as not tricky.
std::vector<CycleClass> classify_tricky_triangles(const CycleCover& cmax, const Digraph& g);

// One parallel-edge bundle (u, v, multiplicity).
struct EdgeBundle {
  int u = 0;
  int v = 0;
  int mult = 0;
};

// For a C_max triangle that fails one of the tricky-triangle inequalities,
// the witness replacement subgraphs: a 20/17/3 bundle over the triangle's
// edges in descending weight order when an edge bound fails, and a 20/17
// bundle over an overweight two-edge path of the reversed triangle. Each
// witness weighs at least 14 w(t) and is path-20-colorable, which is what
// makes the rejection sound. Empty result when the triangle is tricky.
std::vector<std::vector<EdgeBundle>> rejected_triangle_replacements(
    const Digraph& g, const std::vector<int>& tri);

// Bipartite conflict graph over tricky 2-triangles: one left vertex per
// distinct 2-cycle of C_max serving as a t-cycle, one right vertex per
// t-point, one edge per triangle. Edge ranks follow the strictly
// decreasing order of the t-cycle weights w'; rank 1 is best.
struct TrickyGraphH {
  std::vector<std::pair<int, int>> tcycles;  // left side, (q, r) orientation
  std::vector<int> tpoints;                  // right side
  struct HEdge {
    int cycle_index = 0;     // into tcycles
    int point_index = 0;     // into tpoints
    int rank = 0;            // 1 = heaviest w' group
    int triangle_index = 0;  // into the input triangle list
  };
  std::vector<HEdge> edges;
};

// Representatives: the tricky 2-triangles picked by a rank-maximal matching
// of H. Pairwise t-cycle-disjoint and t-point-disjoint by construction.
struct RepresentativeSet {
  std::vector<CycleClass> triangles;
};

// Builds H from the tricky 2-triangles in `trickies` (other kinds are
// ignored) and selects the representative set via rank-maximal matching.
std::pair<TrickyGraphH, RepresentativeSet> build_H_and_R(const std::vector<CycleClass>& trickies);

}  // namespace maxatsp
