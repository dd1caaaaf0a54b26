#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "maxatsp/cycles.hpp"
#include "maxatsp/graph.hpp"
#include "maxatsp/oracle.hpp"
#include "maxatsp/rng.hpp"

using namespace maxatsp;

namespace {

Digraph make(int n) { return Digraph(n, 0); }

void set_raw(Digraph& g, int u, int v, int64_t raw) { g.set_w(u, v, raw * kScale); }

int64_t bundle_weight(const Digraph& g, const std::vector<EdgeBundle>& bundle) {
  int64_t w = 0;
  for (const auto& b : bundle) w += b.mult * g.w(b.u, b.v);
  return w;
}

}  // namespace

TEST_CASE("hard cycle predicate on the canonical shapes") {
  Digraph g = make(4);
  set_raw(g, 0, 1, 5);
  set_raw(g, 1, 0, 4);
  CHECK(is_hard_cycle(g, {0, 1}));  // 40 > 27 and 50 > 27

  set_raw(g, 0, 1, 10);
  set_raw(g, 1, 0, 4);
  CHECK(!is_hard_cycle(g, {0, 1}));  // 40 <= 42

  Digraph t = make(3);
  set_raw(t, 0, 1, 6);
  set_raw(t, 1, 2, 3);
  set_raw(t, 2, 0, 1);
  CHECK(!is_hard_cycle(t, {0, 1, 2}));  // edge 1 fails 10 > 30

  set_raw(t, 0, 1, 4);
  set_raw(t, 1, 2, 4);
  set_raw(t, 2, 0, 4);
  CHECK(is_hard_cycle(t, {0, 1, 2}));  // 40 > 36

  // Cycles longer than a triangle can never be hard.
  Digraph q = make(4);
  for (int i = 0; i < 4; ++i) set_raw(q, i, (i + 1) % 4, 100);
  CHECK(!is_hard_cycle(q, {0, 1, 2, 3}));
}

TEST_CASE("classify_hard flags exactly the hard cycles of a cover") {
  Digraph g = make(5);
  set_raw(g, 0, 1, 5);
  set_raw(g, 1, 0, 4);
  set_raw(g, 2, 3, 6);
  set_raw(g, 3, 4, 5);
  set_raw(g, 4, 2, 5);
  CycleCover cover = cover_from_succ({1, 0, 3, 4, 2}, g);
  auto hard = classify_hard(cover, g);
  REQUIRE(hard.size() == 2);
  CHECK(hard[0].kind == CycleKind::hard_2cycle);
  CHECK(hard[0].cycle == std::vector<int>{0, 1});
  CHECK(hard[1].kind == CycleKind::hard_triangle);
  CHECK(hard[1].cycle == std::vector<int>{2, 3, 4});
}

TEST_CASE("compute_cmax equals the exhaustive cycle-cover optimum") {
  CHECK(compute_cmax(load_instance_text("2\n- 5\n4 -\n")).weight == 9 * kScale);

  Rng rng(5150);
  for (int iter = 0; iter < 60; ++iter) {
    int n = 4 + static_cast<int>(rng.below(4));  // 4..8
    Family fam = static_cast<Family>(iter % 3);
    Digraph g = random_instance(n, 100, 9000 + iter, fam);
    CycleCover c = compute_cmax(g);
    CHECK(c.weight == brute_force_cover_opt(g));
    CHECK(c.weight == cover_weight(c, g));
    CHECK(c.weight >= held_karp_opt(g));  // every tour is a cover
  }
}

TEST_CASE("planted heavy tour is recovered as a cover of at least its weight") {
  Digraph g = make(5);
  for (int i = 0; i < 5; ++i) set_raw(g, i, (i + 1) % 5, 100);
  CHECK(compute_cmax(g).weight >= 500 * kScale);
}

TEST_CASE("incorrigible 2-cycle inequalities") {
  // Cover is one 4-cycle 0->1->2->3->0; candidate strange 2-cycle {1,2}.
  Digraph g = make(4);
  set_raw(g, 0, 1, 4);
  set_raw(g, 1, 2, 10);
  set_raw(g, 2, 3, 4);
  set_raw(g, 3, 0, 1);
  set_raw(g, 2, 1, 9);
  CycleCover cover = cover_from_succ({1, 2, 3, 0}, g);
  CHECK(is_incorrigible_2cycle(cover, g, 1, 2));  // 10 > 6 and 9 > 6

  set_raw(g, 0, 1, 8);
  set_raw(g, 2, 3, 8);
  CHECK(!is_incorrigible_2cycle(cover, g, 1, 2));  // 10 <= 12

  auto tricky = classify_tricky_2cycles(cover, g);
  CHECK(tricky.empty());

  set_raw(g, 0, 1, 4);
  set_raw(g, 2, 3, 4);
  tricky = classify_tricky_2cycles(cover, g);
  REQUIRE(tricky.size() == 1);
  CHECK(tricky[0].kind == CycleKind::tricky_2cycle);
  CHECK(tricky[0].cycle == std::vector<int>{1, 2});
}

TEST_CASE("touching incorrigible pair keeps only the strictly heavier cycle") {
  // Cover is one 5-cycle; {1,2} and {2,3} are both incorrigible and share
  // vertex 2.
  Digraph g = make(5);
  set_raw(g, 0, 1, 1);
  set_raw(g, 1, 2, 10);
  set_raw(g, 2, 1, 10);
  set_raw(g, 2, 3, 9);
  set_raw(g, 3, 2, 9);
  set_raw(g, 3, 4, 1);
  set_raw(g, 4, 0, 1);
  CycleCover cover = cover_from_succ({1, 2, 3, 4, 0}, g);
  CHECK(is_incorrigible_2cycle(cover, g, 1, 2));
  CHECK(is_incorrigible_2cycle(cover, g, 2, 3));
  // The touching-pair structure forces the lighter member's far neighbor
  // under w(covered)/3.
  CHECK(g.w(3, 4) < g.w(2, 3) / 3);

  auto tricky = classify_tricky_2cycles(cover, g);
  REQUIRE(tricky.size() == 1);
  CHECK(tricky[0].cycle == std::vector<int>{1, 2});

  // A weight tie eliminates both members.
  set_raw(g, 2, 3, 10);
  set_raw(g, 3, 2, 10);
  CHECK(is_incorrigible_2cycle(cover, g, 1, 2));
  CHECK(is_incorrigible_2cycle(cover, g, 2, 3));
  CHECK(classify_tricky_2cycles(cover, g).empty());
}

TEST_CASE("2-cycles inside a cover triangle are not incorrigible candidates") {
  Digraph g = make(3);
  set_raw(g, 0, 1, 10);
  set_raw(g, 1, 0, 10);  // heavy both ways, but inside the cover triangle
  set_raw(g, 1, 2, 1);
  set_raw(g, 2, 0, 1);
  CycleCover cover = cover_from_succ({1, 2, 0}, g);
  CHECK(!is_incorrigible_2cycle(cover, g, 0, 1));
  CHECK(classify_tricky_2cycles(cover, g).empty());
}

TEST_CASE("hard 2-cycles of the cover are tricky and disjoint from the rest") {
  Digraph g = make(6);
  set_raw(g, 0, 1, 5);
  set_raw(g, 1, 0, 4);  // hard 2-cycle in the cover
  set_raw(g, 2, 3, 10);
  set_raw(g, 3, 4, 4);
  set_raw(g, 4, 5, 4);
  set_raw(g, 5, 2, 4);
  set_raw(g, 3, 2, 9);  // incorrigible strange cycle {2,3}
  CycleCover cover = cover_from_succ({1, 0, 3, 4, 5, 2}, g);
  auto tricky = classify_tricky_2cycles(cover, g);
  REQUIRE(tricky.size() == 2);
  CHECK(tricky[0].cycle == std::vector<int>{0, 1});
  CHECK(tricky[1].cycle == std::vector<int>{2, 3});
}

TEST_CASE("tricky triangle bounds on cover triangles") {
  Digraph g = make(3);
  set_raw(g, 0, 1, 10);
  set_raw(g, 1, 2, 10);
  set_raw(g, 2, 0, 10);
  set_raw(g, 1, 0, 1);
  set_raw(g, 2, 1, 1);
  set_raw(g, 0, 2, 1);
  CycleCover cover = cover_from_succ({1, 2, 0}, g);
  auto tricky = classify_tricky_triangles(cover, g);
  REQUIRE(tricky.size() == 1);
  CHECK(tricky[0].kind == CycleKind::tricky_3triangle);
  CHECK(tricky[0].cycle == std::vector<int>{0, 1, 2});
  CHECK(rejected_triangle_replacements(g, {0, 1, 2}).empty());
}

TEST_CASE("boundary triangle (12,9,9) is rejected with a weighty replacement") {
  Digraph g = make(3);
  set_raw(g, 0, 1, 12);
  set_raw(g, 1, 2, 9);
  set_raw(g, 2, 0, 9);
  CycleCover cover = cover_from_succ({1, 2, 0}, g);
  CHECK(classify_tricky_triangles(cover, g).empty());

  auto repl = rejected_triangle_replacements(g, {0, 1, 2});
  REQUIRE(!repl.empty());
  int64_t wt = (12 + 9 + 9) * kScale;
  for (const auto& bundle : repl) CHECK(bundle_weight(g, bundle) >= 14 * wt);
  // The edge-bound witness uses multiplicities 20/17/3 in weight order.
  REQUIRE(repl[0].size() == 3);
  CHECK(repl[0][0].mult == 20);
  CHECK(repl[0][0].u == 0);
  CHECK(repl[0][0].v == 1);
  CHECK(repl[0][1].mult == 17);
  CHECK(repl[0][2].mult == 3);
}

TEST_CASE("overweight reverse path rejects an otherwise balanced triangle") {
  Digraph g = make(3);
  set_raw(g, 0, 1, 10);
  set_raw(g, 1, 2, 10);
  set_raw(g, 2, 0, 10);
  set_raw(g, 2, 1, 12);
  set_raw(g, 1, 0, 12);
  CycleCover cover = cover_from_succ({1, 2, 0}, g);
  CHECK(classify_tricky_triangles(cover, g).empty());

  auto repl = rejected_triangle_replacements(g, {0, 1, 2});
  REQUIRE(repl.size() == 1);  // edge bounds hold; only the path witness fires
  REQUIRE(repl[0].size() == 2);
  CHECK(repl[0][0].mult == 20);
  CHECK(repl[0][1].mult == 17);
  int64_t wt = 30 * kScale;
  CHECK(bundle_weight(g, repl[0]) >= 14 * wt);
}

TEST_CASE("planted tricky 2-triangle classification and derived quantities") {
  Digraph g = make(4);
  set_raw(g, 0, 1, 16);  // (p,q)
  set_raw(g, 1, 2, 20);  // (q,r)
  set_raw(g, 2, 0, 16);  // (r,p)
  set_raw(g, 2, 1, 34);  // anti-edge
  set_raw(g, 0, 3, 1);
  set_raw(g, 3, 0, 1);
  CycleCover cover = cover_from_succ({3, 2, 1, 0}, g);
  auto tricky = classify_tricky_triangles(cover, g);
  REQUIRE(tricky.size() == 1);
  const CycleClass& t = tricky[0];
  CHECK(t.kind == CycleKind::tricky_2triangle);
  CHECK(t.cycle == std::vector<int>{0, 1, 2});
  CHECK(t.tpoint == 0);
  CHECK(t.tcycle == std::pair<int, int>{1, 2});
  CHECK(t.kappa == 34 * kScale / 10);
  CHECK(t.delta == 4 * kScale);
  CHECK(t.wprime == 24 * kScale);
}

TEST_CASE("tricky 2-triangle third condition is non-strict at equality") {
  // w(q,r)=10, w(r,q)=20 makes 6(w(q,r)+w(r,q)) = 5 w(t) exactly when
  // w(t)=36; sides 13/13 satisfy the second condition.
  Digraph g = make(4);
  set_raw(g, 0, 1, 13);
  set_raw(g, 1, 2, 10);
  set_raw(g, 2, 0, 13);
  set_raw(g, 2, 1, 20);
  set_raw(g, 0, 3, 1);
  set_raw(g, 3, 0, 1);
  CycleCover cover = cover_from_succ({3, 2, 1, 0}, g);
  auto tricky = classify_tricky_triangles(cover, g);
  REQUIRE(tricky.size() == 1);
  CHECK(tricky[0].kind == CycleKind::tricky_2triangle);

  // Nudging the anti-edge down breaks the strict half-weight condition.
  set_raw(g, 2, 1, 18);
  CHECK(classify_tricky_triangles(cover, g).empty());
}

TEST_CASE("anti-edge below 3/2 of the covered edge is never tricky") {
  Digraph g = make(4);
  set_raw(g, 0, 1, 16);
  set_raw(g, 1, 2, 20);
  set_raw(g, 2, 0, 16);
  set_raw(g, 2, 1, 30);  // exactly 3/2 of w(q,r): boundary fails strictly
  set_raw(g, 0, 3, 1);
  set_raw(g, 3, 0, 1);
  CycleCover cover = cover_from_succ({3, 2, 1, 0}, g);
  CHECK(classify_tricky_triangles(cover, g).empty());
}

TEST_CASE("representative selection via the conflict graph") {
  auto mk = [](int p, int q, int r, int64_t wqr, int64_t wrq) {
    CycleClass cc;
    cc.cycle = {p, q, r};
    cc.kind = CycleKind::tricky_2triangle;
    cc.tpoint = p;
    cc.tcycle = std::make_pair(q, r);
    cc.kappa = wrq * kScale / 10;
    cc.delta = wrq * kScale - 3 * wqr * kScale / 2;
    cc.wprime = wqr * kScale + *cc.delta;
    return cc;
  };

  SUBCASE("single triangle is its own representative") {
    auto [h, rep] = build_H_and_R({mk(0, 1, 2, 20, 34)});
    CHECK(h.edges.size() == 1);
    CHECK(h.edges[0].rank == 1);
    REQUIRE(rep.triangles.size() == 1);
    CHECK(rep.triangles[0].tpoint == 0);
  }

  SUBCASE("shared t-point keeps the heavier w-prime triangle") {
    // Both triangles use t-point 0; t-cycles (1,2) and (3,4) with
    // w' 24 and 14.
    auto [h, rep] = build_H_and_R({mk(0, 1, 2, 20, 34), mk(0, 3, 4, 10, 19)});
    CHECK(h.edges.size() == 2);
    CHECK(h.edges[0].rank == 1);
    CHECK(h.edges[1].rank == 2);
    REQUIRE(rep.triangles.size() == 1);
    CHECK(rep.triangles[0].tcycle == std::pair<int, int>{1, 2});
  }

  SUBCASE("disjoint triangles are both representatives") {
    auto [h, rep] = build_H_and_R({mk(0, 1, 2, 20, 34), mk(5, 3, 4, 10, 19)});
    CHECK(h.edges.size() == 2);
    CHECK(rep.triangles.size() == 2);
  }

  SUBCASE("no tricky triangles, empty result") {
    auto [h, rep] = build_H_and_R({});
    CHECK(h.edges.empty());
    CHECK(rep.triangles.empty());
  }

  SUBCASE("two t-points over one t-cycle, only one representative") {
    auto [h, rep] = build_H_and_R({mk(0, 1, 2, 20, 34), mk(5, 1, 2, 20, 34)});
    CHECK(h.tcycles.size() == 1);
    CHECK(h.tpoints.size() == 2);
    REQUIRE(rep.triangles.size() == 1);
  }
}

TEST_CASE("random covers: tricky structures are consistent with rejections") {
  Rng rng(424242);
  for (int iter = 0; iter < 80; ++iter) {
    int n = 4 + static_cast<int>(rng.below(5));
    Family fam = static_cast<Family>(iter % 3);
    Digraph g = random_instance(n, 100, 31000 + iter, fam);
    CycleCover cover = compute_cmax(g);
    auto tricky = classify_tricky_triangles(cover, g);
    for (const auto& cyc : cover.cycles) {
      if (cyc.size() != 3) continue;
      bool listed = false;
      for (const auto& t : tricky)
        if (t.kind == CycleKind::tricky_3triangle && t.cycle == cyc) listed = true;
      auto repl = rejected_triangle_replacements(g, cyc);
      CHECK(listed == repl.empty());
      int64_t wt = g.w(cyc[0], cyc[1]) + g.w(cyc[1], cyc[2]) + g.w(cyc[2], cyc[0]);
      for (const auto& bundle : repl) CHECK(bundle_weight(g, bundle) >= 14 * wt);
    }
    // Tricky 2-cycles are pairwise vertex-disjoint on every run.
    auto two = classify_tricky_2cycles(cover, g);
    for (size_t i = 0; i < two.size(); ++i)
      for (size_t j = i + 1; j < two.size(); ++j)
        for (int a : two[i].cycle)
          for (int b : two[j].cycle) CHECK(a != b);
  }
}
