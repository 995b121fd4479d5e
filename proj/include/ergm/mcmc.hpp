#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ergm/graph.hpp"
#include "ergm/model.hpp"

namespace ergm {

struct TraceRecord {
  long long step = 0;
  long long edges = 0;                  // unordered edge count
  std::vector<long long> motif_counts;  // ordered counts, one per model motif
};

struct ChainTrace {
  std::string model_id;
  std::string initial;
  long long stride = 100;
  std::vector<TraceRecord> records;  // step indices strictly increasing
};

// Forward Glauber chain: n_steps single-edge updates with freshly drawn
// (slot, uniform) pairs. Returns the final state and a trace recorded every
// `record_stride` steps (plus the final step). n_steps = 0 leaves x0
// untouched and the trace empty.
std::pair<Graph, ChainTrace> forward_run(const ErgmModel& model, const Graph& x0,
                                         long long n_steps, std::uint64_t seed,
                                         long long record_stride = 100,
                                         std::string initial_desc = "");

// Each slot present independently with probability p.
Graph erdos_renyi(int n, double p, std::uint64_t seed);

// Coupled forward runs from the two extreme states through shared randomness;
// entry r is the first step at which the chains met (-1 if they did not meet
// within max_steps). Requires a monotone model.
std::vector<long long> forward_coupling_times(const ErgmModel& model, int runs,
                                              long long max_steps,
                                              std::uint64_t seed,
                                              bool parallel = true);

struct CoalescencePoint {
  long long depth = 0;
  double fraction = 0.0;  // fraction of runs coalesced by `depth`
};

// Empirical distribution function of the forward coupling time, evaluated at
// the given depths over runs_per_depth shared coupled runs.
std::vector<CoalescencePoint> empirical_coalescence_curve(
    const ErgmModel& model, const std::vector<long long>& depths,
    int runs_per_depth, std::uint64_t seed, bool parallel = true);

// Trace CSV: "step,edges,<motif name>..." one row per record.
void write_trace_csv(std::ostream& os, const ErgmModel& model,
                     const ChainTrace& trace,
                     const std::vector<std::string>& header_comments = {});

}  // namespace ergm
