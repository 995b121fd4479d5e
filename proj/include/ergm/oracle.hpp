#pragma once

#include <numbers>
#include <vector>

#include "ergm/model.hpp"

namespace ergm {

// Exact quantities by full enumeration of the 2^(n(n-1)/2) graphs. Hard cap
// n <= 5 (1024 states). States are indexed by their canonical slot-bit
// pattern; see slot_bits().
struct ExactDistribution {
  int n_vertices = 0;
  std::vector<double> probabilities;  // all strictly positive, sum to 1
  double log_z = 0.0;
};

// Row-stochastic single-edge Glauber kernel over all graphs of order n.
// Off-diagonal entries connect only states that differ in exactly one slot.
struct TransitionMatrix {
  int n_vertices = 0;
  int n_states = 0;
  std::vector<double> p;  // row-major n_states * n_states

  double at(int from, int to) const {
    return p[static_cast<std::size_t>(from) * n_states + to];
  }
};

inline constexpr double kMixingThreshold = 1.0 / std::numbers::e;

ExactDistribution exact_distribution(const ErgmModel& model);
TransitionMatrix exact_transition_matrix(const ErgmModel& model,
                                         bool parallel = true);

// dbar(n) for n = 1..n_max: the maximum over all ordered state pairs of the
// total variation distance between the n-step distributions.
std::vector<double> dbar_curve(const TransitionMatrix& P, int n_max,
                               bool parallel = true);

// Minimal n with dbar(n) <= threshold; throws if not reached within n_max.
int exact_t_mix(const TransitionMatrix& P, double threshold = kMixingThreshold,
                int n_max = 1 << 20, bool parallel = true);

// (1/2) * sum |p_i - q_i| for distributions of equal length.
double tv_distance(const std::vector<double>& p, const std::vector<double>& q);

// max_j | (pi P)_j - pi_j |
double stationarity_error(const ExactDistribution& pi, const TransitionMatrix& P);

// Dense kernels behind the oracle, exposed for the benchmark and the
// serial-vs-parallel equivalence tests. Results are bitwise independent of
// `parallel`: each output entry is accumulated in a fixed order by one thread.
void mat_mul(const std::vector<double>& a, const std::vector<double>& b,
             std::vector<double>& out, int s, bool parallel = true);
double dbar_max_tv(const std::vector<double>& p, int s, bool parallel = true);

}  // namespace ergm
