#include "ergm/cftp.hpp"

#include <cassert>
#include <chrono>
#include <stdexcept>

namespace ergm {

const Graph& CftpResult::sample() const {
  if (!coalesced)
    throw std::logic_error("no sample: chains did not coalesce within max_depth");
  return upper;
}

Graph backward_map(const ErgmModel& model, RandomnessStream& stream,
                   long long depth, const Graph& x0) {
  if (x0.order() != model.order())
    throw std::invalid_argument("graph order does not match model");
  if (depth < 0) throw std::invalid_argument("depth must be nonnegative");
  stream.ensure(static_cast<std::size_t>(depth));
  const auto slots = edge_slots(model.order());
  Graph x = x0;
  for (long long k = depth; k >= 1; --k) {
    const auto& r = stream.at_negative(static_cast<std::size_t>(k));
    model.glauber_update_inplace(x, slots[r.slot], r.u);
  }
  return x;
}

CftpResult run_cftp(const ErgmModel& model, std::uint64_t seed,
                    const CftpOptions& opts) {
  if (!model.is_monotone())
    throw std::invalid_argument(
        "model is not monotone (a non-edge motif has beta < 0); "
        "the sandwich coupling is not valid, refusing to run CFTP");
  if (opts.max_depth < 1 || opts.doubling_base < 1 ||
      opts.doubling_base > opts.max_depth)
    throw std::invalid_argument(
        "need 1 <= doubling_base <= max_depth and max_depth >= 1");

  const auto t0 = std::chrono::steady_clock::now();
  const int n = model.order();
  const auto slots = edge_slots(n);
  RandomnessStream stream(seed, slots.size());

  CftpResult res;
  res.seed = seed;
  res.schedule = opts.schedule;

  long long depth = (opts.schedule == Schedule::Unit) ? 1 : opts.doubling_base;
  while (true) {
    stream.ensure(static_cast<std::size_t>(depth));
    // Every pass restarts the extreme chains; only the stream carries over.
    Graph upper = complete_graph(n);
    Graph lower = empty_graph(n);
    for (long long k = depth; k >= 1; --k) {
      const auto& r = stream.at_negative(static_cast<std::size_t>(k));
      model.glauber_update_inplace(upper, slots[r.slot], r.u);
      model.glauber_update_inplace(lower, slots[r.slot], r.u);
      assert(leq(lower, upper));
    }
    ++res.passes;
    res.stop_time = depth;
    if (lower == upper) {
      res.coalesced = true;
      res.lower = std::move(lower);
      res.upper = std::move(upper);
      break;
    }
    const long long next =
        (opts.schedule == Schedule::Unit) ? depth + 1 : depth * 2;
    if (next > opts.max_depth) {
      res.coalesced = false;
      res.lower = std::move(lower);
      res.upper = std::move(upper);
      break;
    }
    depth = next;
  }

  res.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  return res;
}

std::vector<CftpResult> run_cftp_batch(const ErgmModel& model,
                                       const std::vector<std::uint64_t>& seeds,
                                       const CftpOptions& opts, bool parallel) {
  if (!model.is_monotone())
    throw std::invalid_argument(
        "model is not monotone (a non-edge motif has beta < 0); "
        "the sandwich coupling is not valid, refusing to run CFTP");
  std::vector<CftpResult> out(seeds.size());
  const long long count = static_cast<long long>(seeds.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long long i = 0; i < count; ++i)
    out[static_cast<std::size_t>(i)] =
        run_cftp(model, seeds[static_cast<std::size_t>(i)], opts);
  return out;
}

}  // namespace ergm
