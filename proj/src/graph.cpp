#include "ergm/graph.hpp"

#include <bit>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ergm {

namespace {

int checked_order(int n) {
  if (n < 2) throw std::invalid_argument("graph order must be at least 2");
  return n;
}

}  // namespace

Graph::Graph(int n)
    : n_(checked_order(n)),
      words_((n + 63) / 64),
      bits_(static_cast<std::size_t>(n) * words_, 0) {}

void Graph::check_slot(EdgeSlot e) const {
  if (e.i < 1 || e.j > n_ || e.i >= e.j)
    throw std::out_of_range("edge slot requires 1 <= i < j <= n");
}

bool Graph::has(int i, int j) const {
  if (i < 1 || j < 1 || i > n_ || j > n_)
    throw std::out_of_range("vertex label out of range");
  if (i == j) return false;
  const std::size_t w =
      static_cast<std::size_t>(i - 1) * words_ + static_cast<std::size_t>(j - 1) / 64;
  return (bits_[w] >> ((j - 1) % 64)) & 1u;
}

void Graph::set_edge(EdgeSlot e, bool present) {
  check_slot(e);
  const std::size_t wi =
      static_cast<std::size_t>(e.i - 1) * words_ + static_cast<std::size_t>(e.j - 1) / 64;
  const std::size_t wj =
      static_cast<std::size_t>(e.j - 1) * words_ + static_cast<std::size_t>(e.i - 1) / 64;
  const std::uint64_t mi = 1ULL << ((e.j - 1) % 64);
  const std::uint64_t mj = 1ULL << ((e.i - 1) % 64);
  if (present) {
    bits_[wi] |= mi;
    bits_[wj] |= mj;
  } else {
    bits_[wi] &= ~mi;
    bits_[wj] &= ~mj;
  }
}

Graph Graph::with_edge(EdgeSlot e, bool present) const {
  Graph out = *this;
  out.set_edge(e, present);
  return out;
}

int Graph::edge_count() const {
  long long total = 0;
  for (std::uint64_t w : bits_) total += std::popcount(w);
  return static_cast<int>(total / 2);  // each edge is stored in two rows
}

int Graph::degree(int v) const {
  if (v < 1 || v > n_) throw std::out_of_range("vertex label out of range");
  int d = 0;
  const std::size_t base = static_cast<std::size_t>(v - 1) * words_;
  for (int w = 0; w < words_; ++w) d += std::popcount(bits_[base + w]);
  return d;
}

int Graph::common_neighbors(int i, int j) const {
  if (i < 1 || j < 1 || i > n_ || j > n_)
    throw std::out_of_range("vertex label out of range");
  // Diagonal bits are never set, so row_i & row_j cannot count i or j.
  const std::size_t bi = static_cast<std::size_t>(i - 1) * words_;
  const std::size_t bj = static_cast<std::size_t>(j - 1) * words_;
  int c = 0;
  for (int w = 0; w < words_; ++w) c += std::popcount(bits_[bi + w] & bits_[bj + w]);
  return c;
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) g.set_edge({i, j}, true);
  return g;
}

bool leq(const Graph& x, const Graph& y) {
  if (x.n_ != y.n_) throw std::invalid_argument("graph order mismatch");
  for (std::size_t w = 0; w < x.bits_.size(); ++w)
    if (x.bits_[w] & ~y.bits_[w]) return false;
  return true;
}

std::vector<EdgeSlot> edge_slots(int n) {
  checked_order(n);
  std::vector<EdgeSlot> slots;
  slots.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) slots.push_back({i, j});
  return slots;
}

int slot_index(int n, EdgeSlot e) {
  checked_order(n);
  if (e.i < 1 || e.j > n || e.i >= e.j)
    throw std::out_of_range("edge slot requires 1 <= i < j <= n");
  const int a = e.i - 1, b = e.j - 1;
  return a * n - a * (a + 1) / 2 + (b - a - 1);
}

EdgeSlot slot_at(int n, int index) {
  checked_order(n);
  if (index < 0 || index >= n * (n - 1) / 2)
    throw std::out_of_range("slot index out of range");
  int a = 0, idx = index;
  while (idx >= n - 1 - a) {
    idx -= n - 1 - a;
    ++a;
  }
  return {a + 1, a + 2 + idx};
}

std::uint32_t slot_bits(const Graph& x) {
  if (x.order() > 8) throw std::invalid_argument("slot_bits supports n <= 8");
  std::uint32_t bits = 0;
  int t = 0;
  for (int i = 1; i < x.order(); ++i)
    for (int j = i + 1; j <= x.order(); ++j, ++t)
      if (x.has(i, j)) bits |= 1u << t;
  return bits;
}

Graph graph_from_slot_bits(int n, std::uint32_t bits) {
  if (n > 8) throw std::invalid_argument("graph_from_slot_bits supports n <= 8");
  Graph g(n);
  int t = 0;
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j, ++t)
      if (bits & (1u << t)) g.set_edge({i, j}, true);
  return g;
}

void write_edge_list(std::ostream& os, const Graph& x,
                     const std::vector<std::string>& header_comments) {
  for (const auto& line : header_comments) os << "# " << line << "\n";
  os << "N " << x.order() << "\n";
  for (int i = 1; i < x.order(); ++i)
    for (int j = i + 1; j <= x.order(); ++j)
      if (x.has(i, j)) os << i << " " << j << "\n";
}

Graph read_edge_list(std::istream& is) {
  std::string line;
  int n = -1;
  Graph g;
  while (std::getline(is, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    if (n < 0) {
      std::string tag;
      ls >> tag >> n;
      if (!ls || tag != "N" || n < 2)
        throw std::runtime_error("edge list must start with a valid 'N <n>' line");
      g = Graph(n);
    } else {
      int i = 0, j = 0;
      ls >> i >> j;
      if (!ls) throw std::runtime_error("malformed edge line: " + line);
      g.set_edge({i, j}, true);
    }
  }
  if (n < 0) throw std::runtime_error("edge list missing 'N <n>' line");
  return g;
}

}  // namespace ergm
