#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace maxatsp {

// Input weights are multiplied by this factor on load. Everything downstream
// works on scaled integers: half an edge is then worth 10*raw and the dilution
// discount kappa(t)/2 = w(r,q)/20 is worth 1*raw, so no rationals ever appear.
constexpr int64_t kScale = 20;

struct InstanceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Complete weighted digraph on vertices 0..n-1. Weights are scaled integers,
// nonnegative, diagonal unused.
class Digraph {
  public:
    Digraph() = default;
    Digraph(int n, int64_t fill = 0) : n_(n), w_(static_cast<size_t>(n) * n, fill) {}

    int n() const { return n_; }
    int64_t w(int u, int v) const { return w_[static_cast<size_t>(u) * n_ + v]; }
    void set_w(int u, int v, int64_t value) { w_[static_cast<size_t>(u) * n_ + v] = value; }

  private:
    int n_ = 0;
    std::vector<int64_t> w_;
};

struct HalfEdge {
    int u = 0, v = 0;        // the underlying edge (u,v)
    bool head = false;       // head half sits at v, tail half at u
    int64_t weight = 0;      // scaled

    bool operator==(const HalfEdge&) const = default;
};

// Cycle cover as a fixed-point-free permutation plus its cycle decomposition.
struct CycleCover {
    std::vector<int> succ;
    std::vector<std::vector<int>> cycles;  // each cycle as a vertex sequence
    int64_t weight = 0;
};

struct Tour {
    std::vector<int> order;  // visits each vertex once; closes back to order[0]
    int64_t weight = 0;      // scaled
};

int64_t tour_weight(const std::vector<int>& order, const Digraph& g);

// Builds the cycle decomposition of succ and recomputes the weight.
CycleCover cover_from_succ(const std::vector<int>& succ, const Digraph& g);

int64_t cover_weight(const CycleCover& c, const Digraph& g);

// Parses either the matrix format (first line n, then n rows with "-" on the
// diagonal) or the edge-list format (lines "u v w", 1-based, all arcs present).
// Weights are validated as nonnegative integers and scaled by kScale.
Digraph load_instance(std::istream& in);
Digraph load_instance_text(const std::string& text);

// Matrix-format serialization with unscaled weights; load(save(g)) == g.
std::string save_instance(const Digraph& g);

enum class Family { uniform, two_cycle_heavy, triangle_heavy };

Family family_from_name(const std::string& name);
std::string family_name(Family f);

// Deterministic under (n, wmax, seed, family). The planted families force the
// classifier branches that uniform weights rarely reach: two-cycle-heavy plants
// vertex-disjoint pairs with both arcs near wmax (hard 2-cycles), and
// triangle-heavy alternates heavy equilateral-ish triangles with light
// opposites and the skewed 2-cycle-plus-apex pattern.
Digraph random_instance(int n, int64_t wmax, uint64_t seed, Family family);

}  // namespace maxatsp
