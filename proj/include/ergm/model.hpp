#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "ergm/graph.hpp"
#include "ergm/motif.hpp"

namespace ergm {

// Numerically stable 1 / (1 + exp(-z)); safe for |z| in the hundreds.
inline double logistic(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

// Exponential random graph model on n vertices: unnormalized density
// exp( sum_k beta_k * N_{g_k}(x) / n^(m_k - 2) ) with ordered motif counts.
// The first motif is always the single edge. The normalizing constant is
// never computed here.
class ErgmModel {
 public:
  ErgmModel(int n_vertices, std::vector<MotifSpec> motifs, std::vector<double> beta);

  int order() const { return n_; }
  const std::vector<MotifSpec>& motifs() const { return motifs_; }
  const std::vector<double>& beta() const { return beta_; }

  // Sufficient condition for a monotone single-edge conditional: every
  // parameter beyond the edge term is nonnegative.
  bool is_monotone() const;

  // log of the unnormalized probability of x.
  double log_weight(const Graph& x) const;

  // Conditional probability that slot e holds an edge given the rest of x.
  // Computed from change statistics; does not depend on the current x(e).
  double glauber_p1(const Graph& x, EdgeSlot e) const;

  // Single-site update: clears e if u <= 1 - glauber_p1, else sets it.
  // Deterministic in (x, e, u); u must lie in [0, 1].
  Graph glauber_update(const Graph& x, EdgeSlot e, double u) const;
  void glauber_update_inplace(Graph& x, EdgeSlot e, double u) const;

  std::string id() const;  // compact description for file headers

 private:
  void check_graph(const Graph& x) const;

  int n_;
  std::vector<MotifSpec> motifs_;
  std::vector<double> beta_;
  std::vector<double> scale_;  // n^(m_k - 2)
};

}  // namespace ergm
