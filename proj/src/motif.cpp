#include "ergm/motif.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace ergm {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

void check_graph_motif(const Graph& x, const MotifSpec& g) {
  if (g.m > x.order())
    throw std::invalid_argument("motif has more vertices than the graph");
}

void check_slot_in(const Graph& x, EdgeSlot e) {
  if (e.i < 1 || e.j > x.order() || e.i >= e.j)
    throw std::out_of_range("edge slot requires 1 <= i < j <= n");
}

}  // namespace

MotifSpec::Shape MotifSpec::shape() const {
  // Any 2-edge motif on 3 vertices is a two-star up to relabeling, and the
  // ordered count depends only on the isomorphism class.
  if (m == 2) return Shape::Edge;
  if (m == 3 && edges.size() == 2) return Shape::TwoStar;
  if (m == 3 && edges.size() == 3) return Shape::Triangle;
  return Shape::Generic;
}

MotifSpec MotifSpec::edge() { return {2, {{1, 2}}, "edge"}; }
MotifSpec MotifSpec::two_star() { return {3, {{1, 2}, {1, 3}}, "two_star"}; }
MotifSpec MotifSpec::triangle() { return {3, {{1, 2}, {1, 3}, {2, 3}}, "triangle"}; }

MotifSpec MotifSpec::custom(int m, std::vector<std::pair<int, int>> edges) {
  if (m < 2) throw std::invalid_argument("motif needs at least 2 vertices");
  if (edges.empty())
    throw std::invalid_argument("motif with no edges is degenerate (constant count)");
  for (auto& [a, b] : edges) {
    if (a == b) throw std::invalid_argument("motif edges cannot be loops");
    if (a > b) std::swap(a, b);
    if (a < 1 || b > m)
      throw std::invalid_argument("motif edge endpoint outside 1..m");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("duplicate motif edge");
  return {m, std::move(edges), "custom"};
}

MotifSpec MotifSpec::parse(std::string_view text) {
  const std::string s = trim(text);
  if (s == "edge") return edge();
  if (s == "two_star") return two_star();
  if (s == "triangle") return triangle();
  if (s.starts_with("custom(") && s.ends_with(")")) {
    const std::string inner = s.substr(7, s.size() - 8);
    const auto semi = inner.find(';');
    if (semi == std::string::npos)
      throw std::invalid_argument("custom motif needs 'custom(m; i-j, ...)': " + s);
    int m = 0;
    try {
      m = std::stoi(trim(inner.substr(0, semi)));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad motif vertex count in: " + s);
    }
    std::vector<std::pair<int, int>> edges;
    std::stringstream list(inner.substr(semi + 1));
    std::string item;
    while (std::getline(list, item, ',')) {
      const std::string pair = trim(item);
      const auto dash = pair.find('-');
      if (pair.empty() || dash == std::string::npos)
        throw std::invalid_argument("bad motif edge '" + pair + "' in: " + s);
      try {
        edges.emplace_back(std::stoi(trim(pair.substr(0, dash))),
                           std::stoi(trim(pair.substr(dash + 1))));
      } catch (const std::exception&) {
        throw std::invalid_argument("bad motif edge '" + pair + "' in: " + s);
      }
    }
    return custom(m, std::move(edges));
  }
  throw std::invalid_argument("unknown motif: " + s);
}

std::string MotifSpec::to_string() const {
  if (name == "edge" || name == "two_star" || name == "triangle") return name;
  std::ostringstream os;
  os << "custom(" << m << ";";
  for (std::size_t k = 0; k < edges.size(); ++k)
    os << (k ? ", " : " ") << edges[k].first << "-" << edges[k].second;
  os << ")";
  return os.str();
}

long long count_motif_generic(const Graph& x, const MotifSpec& g) {
  check_graph_motif(x, g);
  const int n = x.order();
  // Motif neighbors at earlier tuple positions; edges are normalized a < b.
  std::vector<std::vector<int>> back(g.m);
  for (const auto& [a, b] : g.edges) back[b - 1].push_back(a - 1);

  std::vector<int> assign(g.m, 0);
  std::vector<char> used(n + 1, 0);
  long long total = 0;
  auto rec = [&](auto&& self, int t) -> void {
    if (t == g.m) {
      ++total;
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (used[v]) continue;
      bool ok = true;
      for (int a : back[t])
        if (!x.has(assign[a], v)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      used[v] = 1;
      assign[t] = v;
      self(self, t + 1);
      used[v] = 0;
    }
  };
  rec(rec, 0);
  return total;
}

long long count_motif(const Graph& x, const MotifSpec& g) {
  check_graph_motif(x, g);
  switch (g.shape()) {
    case MotifSpec::Shape::Edge:
      return 2LL * x.edge_count();
    case MotifSpec::Shape::TwoStar: {
      long long total = 0;
      for (int v = 1; v <= x.order(); ++v) {
        const long long d = x.degree(v);
        total += d * (d - 1);
      }
      return total;
    }
    case MotifSpec::Shape::Triangle: {
      // Each unordered triangle is met by three of its edges: ordered count
      // is 6 * (sum over edges of common neighbors) / 3.
      long long total = 0;
      for (int i = 1; i < x.order(); ++i)
        for (int j = i + 1; j <= x.order(); ++j)
          if (x.has(i, j)) total += x.common_neighbors(i, j);
      return 2 * total;
    }
    case MotifSpec::Shape::Generic:
      return count_motif_generic(x, g);
  }
  return 0;  // unreachable
}

long long count_motif_at_edge(const Graph& x, const MotifSpec& g, EdgeSlot e) {
  check_graph_motif(x, g);
  check_slot_in(x, e);
  const int n = x.order();
  std::vector<std::vector<int>> back(g.m);
  for (const auto& [a, b] : g.edges) back[b - 1].push_back(a - 1);

  std::vector<int> assign(g.m, 0);
  std::vector<char> used(n + 1, 0);
  long long total = 0;
  auto rec = [&](auto&& self, int t, int endpoints_used) -> void {
    if (2 - endpoints_used > g.m - t) return;  // cannot cover both endpoints
    if (t == g.m) {
      ++total;
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (used[v]) continue;
      bool ok = true;
      for (int a : back[t])
        if (!x.has(assign[a], v)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      used[v] = 1;
      assign[t] = v;
      self(self, t + 1, endpoints_used + (v == e.i || v == e.j ? 1 : 0));
      used[v] = 0;
    }
  };
  rec(rec, 0, 0);
  return total;
}

long long change_statistic_generic(const Graph& x, const MotifSpec& g, EdgeSlot e) {
  // Tuples missing an endpoint of e contribute identically to both counts,
  // so the full-count difference reduces to the edge-restricted difference.
  return count_motif_at_edge(x.with_edge(e, true), g, e) -
         count_motif_at_edge(x.with_edge(e, false), g, e);
}

long long change_statistic(const Graph& x, const MotifSpec& g, EdgeSlot e) {
  check_graph_motif(x, g);
  check_slot_in(x, e);
  switch (g.shape()) {
    case MotifSpec::Shape::Edge:
      return 2;  // one edge, two ordered pairs
    case MotifSpec::Shape::TwoStar: {
      // Degrees evaluated with e cleared; adding e makes 2*deg(i) new stars
      // centered at i (leaf j in either leaf position) and likewise for j.
      const int adj = x.has(e.i, e.j) ? 1 : 0;
      const long long di = x.degree(e.i) - adj;
      const long long dj = x.degree(e.j) - adj;
      return 2 * (di + dj);
    }
    case MotifSpec::Shape::Triangle:
      // One new unordered triangle per common neighbor, six orderings each.
      return 6LL * x.common_neighbors(e.i, e.j);
    case MotifSpec::Shape::Generic:
      return change_statistic_generic(x, g, e);
  }
  return 0;  // unreachable
}

}  // namespace ergm
