#include "ergm/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ergm {

namespace {

void check_oracle_order(int n) {
  if (n > 5)
    throw std::invalid_argument(
        "exact enumeration is capped at n <= 5 (state count 2^(n(n-1)/2))");
}

}  // namespace

ExactDistribution exact_distribution(const ErgmModel& model) {
  check_oracle_order(model.order());
  const int n = model.order();
  const int m = n * (n - 1) / 2;
  const std::size_t states = std::size_t{1} << m;

  std::vector<double> logw(states);
  double max_lw = -std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < states; ++s) {
    logw[s] = model.log_weight(graph_from_slot_bits(n, static_cast<std::uint32_t>(s)));
    max_lw = std::max(max_lw, logw[s]);
  }
  double sum = 0.0;
  for (std::size_t s = 0; s < states; ++s) sum += std::exp(logw[s] - max_lw);
  const double log_z = max_lw + std::log(sum);

  ExactDistribution dist;
  dist.n_vertices = n;
  dist.log_z = log_z;
  dist.probabilities.resize(states);
  for (std::size_t s = 0; s < states; ++s)
    dist.probabilities[s] = std::exp(logw[s] - log_z);
  return dist;
}

TransitionMatrix exact_transition_matrix(const ErgmModel& model, bool parallel) {
  check_oracle_order(model.order());
  const int n = model.order();
  const int m = n * (n - 1) / 2;
  const int states = 1 << m;
  const auto slots = edge_slots(n);

  TransitionMatrix P;
  P.n_vertices = n;
  P.n_states = states;
  P.p.assign(static_cast<std::size_t>(states) * states, 0.0);

#pragma omp parallel for schedule(static) if (parallel)
  for (int s = 0; s < states; ++s) {
    const Graph g = graph_from_slot_bits(n, static_cast<std::uint32_t>(s));
    double* row = &P.p[static_cast<std::size_t>(s) * states];
    for (int t = 0; t < m; ++t) {
      const double p1 = model.glauber_p1(g, slots[static_cast<std::size_t>(t)]);
      row[s | (1 << t)] += p1 / m;
      row[s & ~(1 << t)] += (1.0 - p1) / m;
    }
  }
  return P;
}

void mat_mul(const std::vector<double>& a, const std::vector<double>& b,
             std::vector<double>& out, int s, bool parallel) {
  out.assign(static_cast<std::size_t>(s) * s, 0.0);
#pragma omp parallel for schedule(static) if (parallel)
  for (int i = 0; i < s; ++i) {
    const double* arow = &a[static_cast<std::size_t>(i) * s];
    double* orow = &out[static_cast<std::size_t>(i) * s];
    for (int k = 0; k < s; ++k) {
      const double aik = arow[k];
      if (aik == 0.0) continue;
      const double* brow = &b[static_cast<std::size_t>(k) * s];
      for (int j = 0; j < s; ++j) orow[j] += aik * brow[j];
    }
  }
}

double dbar_max_tv(const std::vector<double>& p, int s, bool parallel) {
  double best = 0.0;
#pragma omp parallel for schedule(dynamic, 4) reduction(max : best) if (parallel)
  for (int x = 0; x < s; ++x) {
    const double* px = &p[static_cast<std::size_t>(x) * s];
    for (int z = x + 1; z < s; ++z) {
      const double* pz = &p[static_cast<std::size_t>(z) * s];
      double tv = 0.0;
      for (int j = 0; j < s; ++j) tv += std::abs(px[j] - pz[j]);
      tv *= 0.5;
      if (tv > best) best = tv;
    }
  }
  return best;
}

std::vector<double> dbar_curve(const TransitionMatrix& P, int n_max, bool parallel) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  std::vector<double> cur = P.p;
  std::vector<double> nxt;
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n_max));
  for (int n = 1;; ++n) {
    out.push_back(dbar_max_tv(cur, P.n_states, parallel));
    if (n == n_max) break;
    mat_mul(cur, P.p, nxt, P.n_states, parallel);
    cur.swap(nxt);
  }
  return out;
}

int exact_t_mix(const TransitionMatrix& P, double threshold, int n_max,
                bool parallel) {
  if (!(threshold > 0.0 && threshold < 1.0))
    throw std::invalid_argument("threshold must lie in (0, 1)");
  std::vector<double> cur = P.p;
  std::vector<double> nxt;
  for (int n = 1; n <= n_max; ++n) {
    if (dbar_max_tv(cur, P.n_states, parallel) <= threshold) return n;
    mat_mul(cur, P.p, nxt, P.n_states, parallel);
    cur.swap(nxt);
  }
  throw std::runtime_error("dbar did not reach the threshold within n_max steps");
}

double tv_distance(const std::vector<double>& p, const std::vector<double>& q) {
  if (p.size() != q.size())
    throw std::invalid_argument("distributions must have equal length");
  double tv = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) tv += std::abs(p[i] - q[i]);
  return 0.5 * tv;
}

double stationarity_error(const ExactDistribution& pi, const TransitionMatrix& P) {
  const int s = P.n_states;
  if (static_cast<int>(pi.probabilities.size()) != s)
    throw std::invalid_argument("distribution and matrix sizes do not match");
  double worst = 0.0;
  for (int j = 0; j < s; ++j) {
    double pushed = 0.0;
    for (int i = 0; i < s; ++i) pushed += pi.probabilities[i] * P.at(i, j);
    worst = std::max(worst, std::abs(pushed - pi.probabilities[j]));
  }
  return worst;
}

}  // namespace ergm
