#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ergm/graph.hpp"

namespace ergm {

// A small pattern graph used as a counting motif. Vertices are labeled 1..m;
// the edge set is normalized (i < j, sorted, duplicate-free) and must be
// non-empty: a motif with no edges has a constant count and is rejected.
struct MotifSpec {
  enum class Shape { Edge, TwoStar, Triangle, Generic };

  int m = 0;
  std::vector<std::pair<int, int>> edges;
  std::string name;

  Shape shape() const;

  static MotifSpec edge();
  static MotifSpec two_star();   // 3 vertices, edges {1,2} and {1,3}
  static MotifSpec triangle();
  static MotifSpec custom(int m, std::vector<std::pair<int, int>> edges);

  // "edge" | "two_star" | "triangle" | "custom(m; i-j, i-j, ...)"
  static MotifSpec parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const MotifSpec&, const MotifSpec&) = default;
};

// Ordered subgraph count: the number of injective m-tuples (v_1..v_m) of
// vertices of x such that g(a,b)=1 implies x(v_a,v_b)=1. Every unordered copy
// is counted once per compatible permutation; e.g. the edge motif counts
// 2 * edge_count(x).
long long count_motif(const Graph& x, const MotifSpec& g);

// Enumeration-based counter; dispatch target for non-builtin motifs and the
// in-library ground truth for the closed-form fast paths.
long long count_motif_generic(const Graph& x, const MotifSpec& g);

// As count_motif, restricted to tuples whose vertex set contains both
// endpoints of e. Accepts any x regardless of the value of x(e).
long long count_motif_at_edge(const Graph& x, const MotifSpec& g, EdgeSlot e);

// N_g(x with e set) - N_g(x with e cleared). Independent of the current
// value x(e); always >= 0. Closed forms for edge / two-star / triangle,
// enumeration otherwise.
long long change_statistic(const Graph& x, const MotifSpec& g, EdgeSlot e);
long long change_statistic_generic(const Graph& x, const MotifSpec& g, EdgeSlot e);

}  // namespace ergm
