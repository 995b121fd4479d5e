#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ergm {

// Unordered pair of vertex labels, 1-based, i < j.
struct EdgeSlot {
  int i = 0;
  int j = 0;
  friend bool operator==(const EdgeSlot&, const EdgeSlot&) = default;
};

// Undirected simple graph on vertices 1..n. Adjacency is kept as row-major
// bitsets; symmetry is structural (set/clear always touches both rows) and
// self-loops are not representable. Equality is bitwise equality of the
// adjacency, which is what coalescence detection compares.
class Graph {
 public:
  Graph() = default;  // order() == 0 placeholder, only useful as a target
  explicit Graph(int n);  // empty graph on n >= 2 vertices

  int order() const { return n_; }
  int slot_count() const { return n_ * (n_ - 1) / 2; }

  bool has(int i, int j) const;  // symmetric read; has(i, i) is false
  bool has(EdgeSlot e) const { return has(e.i, e.j); }

  void set_edge(EdgeSlot e, bool present);
  Graph with_edge(EdgeSlot e, bool present) const;

  int edge_count() const;
  int degree(int v) const;
  // Number of vertices adjacent to both i and j (never counts i or j).
  int common_neighbors(int i, int j) const;

  friend bool operator==(const Graph&, const Graph&) = default;
  friend bool leq(const Graph& x, const Graph& y);

 private:
  void check_slot(EdgeSlot e) const;

  int n_ = 0;
  int words_ = 0;                     // 64-bit words per adjacency row
  std::vector<std::uint64_t> bits_;   // n_ * words_; padding bits stay zero
};

Graph empty_graph(int n);
Graph complete_graph(int n);

// Partial order: x <= y iff every edge of x is an edge of y.
bool leq(const Graph& x, const Graph& y);

// All slots in lexicographic order on (i, j); the position in this list is
// the canonical slot index used by randomness streams and file formats.
std::vector<EdgeSlot> edge_slots(int n);
int slot_index(int n, EdgeSlot e);
EdgeSlot slot_at(int n, int index);

// Pack/unpack the adjacency into a bit pattern over canonical slot indices.
// Only valid for n <= 8 (fits 28 slots); used by the exact enumerator.
std::uint32_t slot_bits(const Graph& x);
Graph graph_from_slot_bits(int n, std::uint32_t bits);

// Edge-list text format: optional '#' comment lines, a line "N <n>", then one
// line "i j" per edge with i < j in ascending lexicographic order.
void write_edge_list(std::ostream& os, const Graph& x,
                     const std::vector<std::string>& header_comments = {});
Graph read_edge_list(std::istream& is);

}  // namespace ergm
