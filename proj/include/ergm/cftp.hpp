#pragma once

#include <cstdint>
#include <vector>

#include "ergm/graph.hpp"
#include "ergm/model.hpp"
#include "ergm/stream.hpp"

namespace ergm {

enum class Schedule { Unit, Doubling };

struct CftpOptions {
  Schedule schedule = Schedule::Doubling;
  long long max_depth = 1LL << 30;  // fail loudly instead of hanging
  long long doubling_base = 1;
};

struct CftpResult {
  bool coalesced = false;
  // Final states of the two extreme chains at time 0. Equal iff coalesced;
  // otherwise they bracket every chain started in between.
  Graph lower;
  Graph upper;
  long long stop_time = 0;  // coalescing depth, or deepest attempted depth
  long long passes = 0;     // number of backward evaluations
  Schedule schedule = Schedule::Doubling;
  std::uint64_t seed = 0;
  double wall_ms = 0.0;

  const Graph& sample() const;  // throws unless coalesced
};

// Apply the updates recorded at times -depth, ..., -1 (in that order) to x0.
Graph backward_map(const ErgmModel& model, RandomnessStream& stream,
                   long long depth, const Graph& x0);

// Monotone coupling from the past over the single-edge update. Runs the two
// extreme chains through shared randomness over backward windows until they
// meet at time 0; the common state is an exact draw from the model.
// Unit schedule tries depths 1, 2, 3, ... (stop_time is then the minimal
// coalescing depth); doubling tries base, 2*base, 4*base, ...
// Requires a monotone model.
CftpResult run_cftp(const ErgmModel& model, std::uint64_t seed,
                    const CftpOptions& opts = {});

// Independent runs, one stream per seed; results are indexed like `seeds`
// regardless of execution order. `parallel` only distributes work.
std::vector<CftpResult> run_cftp_batch(const ErgmModel& model,
                                       const std::vector<std::uint64_t>& seeds,
                                       const CftpOptions& opts = {},
                                       bool parallel = true);

}  // namespace ergm
