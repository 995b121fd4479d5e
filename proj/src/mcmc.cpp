#include "ergm/mcmc.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "ergm/rng.hpp"

namespace ergm {

namespace {

TraceRecord make_record(const ErgmModel& model, const Graph& x, long long step) {
  TraceRecord rec;
  rec.step = step;
  rec.edges = x.edge_count();
  rec.motif_counts.reserve(model.motifs().size());
  for (const auto& g : model.motifs()) rec.motif_counts.push_back(count_motif(x, g));
  return rec;
}

}  // namespace

std::pair<Graph, ChainTrace> forward_run(const ErgmModel& model, const Graph& x0,
                                         long long n_steps, std::uint64_t seed,
                                         long long record_stride,
                                         std::string initial_desc) {
  if (x0.order() != model.order())
    throw std::invalid_argument("initial graph order does not match model");
  if (n_steps < 0) throw std::invalid_argument("n_steps must be nonnegative");
  if (record_stride < 1) throw std::invalid_argument("record_stride must be >= 1");

  const auto slots = edge_slots(model.order());
  Sfc64 rng(seed);
  Graph x = x0;
  ChainTrace trace;
  trace.model_id = model.id();
  trace.initial = std::move(initial_desc);
  trace.stride = record_stride;
  for (long long k = 1; k <= n_steps; ++k) {
    const EdgeSlot e = slots[rng.bounded(slots.size())];
    const double u = rng.u01();
    model.glauber_update_inplace(x, e, u);
    if (k % record_stride == 0 || k == n_steps)
      trace.records.push_back(make_record(model, x, k));
  }
  return {std::move(x), std::move(trace)};
}

Graph erdos_renyi(int n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("edge probability must lie in [0, 1]");
  Graph g(n);
  Sfc64 rng(seed);
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (rng.u01() < p) g.set_edge({i, j}, true);
  return g;
}

std::vector<long long> forward_coupling_times(const ErgmModel& model, int runs,
                                              long long max_steps,
                                              std::uint64_t seed, bool parallel) {
  if (!model.is_monotone())
    throw std::invalid_argument(
        "model is not monotone (a non-edge motif has beta < 0); "
        "coupled extreme chains do not bracket the state space");
  if (runs < 1 || max_steps < 1)
    throw std::invalid_argument("runs and max_steps must be >= 1");

  const int n = model.order();
  const auto slots = edge_slots(n);
  std::vector<long long> times(static_cast<std::size_t>(runs), -1);
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int r = 0; r < runs; ++r) {
    Sfc64 rng(mix_seed(seed, static_cast<std::uint64_t>(r)));
    Graph upper = complete_graph(n);
    Graph lower = empty_graph(n);
    for (long long t = 1; t <= max_steps; ++t) {
      const EdgeSlot e = slots[rng.bounded(slots.size())];
      const double u = rng.u01();
      model.glauber_update_inplace(upper, e, u);
      model.glauber_update_inplace(lower, e, u);
      if (upper == lower) {  // equal states stay equal under shared updates
        times[static_cast<std::size_t>(r)] = t;
        break;
      }
    }
  }
  return times;
}

std::vector<CoalescencePoint> empirical_coalescence_curve(
    const ErgmModel& model, const std::vector<long long>& depths,
    int runs_per_depth, std::uint64_t seed, bool parallel) {
  if (depths.empty()) throw std::invalid_argument("need at least one depth");
  for (long long d : depths)
    if (d < 0) throw std::invalid_argument("depths must be nonnegative");
  const long long max_depth = *std::max_element(depths.begin(), depths.end());
  const auto times = forward_coupling_times(model, runs_per_depth,
                                            std::max(max_depth, 1LL), seed, parallel);
  std::vector<CoalescencePoint> curve;
  curve.reserve(depths.size());
  for (long long d : depths) {
    long long hit = 0;
    for (long long t : times)
      if (t > 0 && t <= d) ++hit;
    curve.push_back({d, static_cast<double>(hit) / runs_per_depth});
  }
  return curve;
}

void write_trace_csv(std::ostream& os, const ErgmModel& model,
                     const ChainTrace& trace,
                     const std::vector<std::string>& header_comments) {
  for (const auto& line : header_comments) os << "# " << line << "\n";
  os << "step,edges";
  for (const auto& g : model.motifs()) os << "," << g.name;
  os << "\n";
  for (const auto& rec : trace.records) {
    os << rec.step << "," << rec.edges;
    for (long long c : rec.motif_counts) os << "," << c;
    os << "\n";
  }
}

}  // namespace ergm
