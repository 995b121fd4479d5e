#include "ergm/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ergm {

std::vector<long long> cftp_state_histogram(const ErgmModel& model,
                                            long long samples,
                                            std::uint64_t master_seed,
                                            Schedule schedule, bool parallel) {
  if (model.order() > 5)
    throw std::invalid_argument("state histogram needs n <= 5");
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  const int m = model.order() * (model.order() - 1) / 2;
  std::vector<long long> hist(std::size_t{1} << m, 0);
  CftpOptions opts;
  opts.schedule = schedule;
#pragma omp parallel if (parallel)
  {
    std::vector<long long> local(hist.size(), 0);
#pragma omp for schedule(dynamic, 256) nowait
    for (long long i = 0; i < samples; ++i) {
      const auto res = run_cftp(model, master_seed + static_cast<std::uint64_t>(i), opts);
      ++local[slot_bits(res.sample())];
    }
#pragma omp critical
    for (std::size_t s = 0; s < hist.size(); ++s) hist[s] += local[s];
  }
  return hist;
}

std::vector<double> normalize_histogram(const std::vector<long long>& counts) {
  long long total = 0;
  for (long long c : counts) total += c;
  if (total <= 0) throw std::invalid_argument("empty histogram");
  std::vector<double> p(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i)
    p[i] = static_cast<double>(counts[i]) / static_cast<double>(total);
  return p;
}

std::vector<long long> cftp_stop_times(const ErgmModel& model, long long runs,
                                       std::uint64_t master_seed,
                                       Schedule schedule, bool parallel) {
  if (runs < 1) throw std::invalid_argument("runs must be >= 1");
  std::vector<long long> times(static_cast<std::size_t>(runs), 0);
  CftpOptions opts;
  opts.schedule = schedule;
#pragma omp parallel for schedule(dynamic, 64) if (parallel)
  for (long long i = 0; i < runs; ++i) {
    const auto res = run_cftp(model, master_seed + static_cast<std::uint64_t>(i), opts);
    times[static_cast<std::size_t>(i)] = res.stop_time;
  }
  return times;
}

EdgeFrequencies cftp_edge_frequencies(const ErgmModel& model, long long samples,
                                      std::uint64_t master_seed,
                                      Schedule schedule, bool parallel) {
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  const auto slots = edge_slots(model.order());
  EdgeFrequencies out;
  out.samples.assign(static_cast<std::size_t>(samples),
                     std::vector<char>(slots.size(), 0));
  CftpOptions opts;
  opts.schedule = schedule;
#pragma omp parallel for schedule(dynamic, 64) if (parallel)
  for (long long i = 0; i < samples; ++i) {
    const auto res = run_cftp(model, master_seed + static_cast<std::uint64_t>(i), opts);
    auto& row = out.samples[static_cast<std::size_t>(i)];
    for (std::size_t t = 0; t < slots.size(); ++t)
      row[t] = res.sample().has(slots[t]) ? 1 : 0;
  }
  out.per_slot.assign(slots.size(), 0.0);
  for (const auto& row : out.samples)
    for (std::size_t t = 0; t < slots.size(); ++t) out.per_slot[t] += row[t];
  for (auto& f : out.per_slot) f /= static_cast<double>(samples);
  return out;
}

MeanStats mean_stats(const std::vector<long long>& xs) {
  if (xs.empty()) throw std::invalid_argument("empty sample");
  MeanStats st;
  for (long long x : xs) st.mean += static_cast<double>(x);
  st.mean /= static_cast<double>(xs.size());
  double ss = 0.0;
  for (long long x : xs) {
    const double d = static_cast<double>(x) - st.mean;
    ss += d * d;
  }
  st.sd = xs.size() > 1 ? std::sqrt(ss / static_cast<double>(xs.size() - 1)) : 0.0;
  st.se = st.sd / std::sqrt(static_cast<double>(xs.size()));
  return st;
}

double ks_statistic(std::vector<long long> a, std::vector<long long> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("empty sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t ia = 0, ib = 0;
  double d = 0.0;
  while (ia < a.size() && ib < b.size()) {
    const long long v = std::min(a[ia], b[ib]);
    while (ia < a.size() && a[ia] == v) ++ia;
    while (ib < b.size() && b[ib] == v) ++ib;
    d = std::max(d, std::abs(static_cast<double>(ia) / na -
                             static_cast<double>(ib) / nb));
  }
  return d;
}

double ks_threshold(std::size_t n, std::size_t m, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("bad alpha");
  const double c = std::sqrt(-std::log(alpha / 2.0) / 2.0);
  return c * std::sqrt(static_cast<double>(n + m) /
                       (static_cast<double>(n) * static_cast<double>(m)));
}

}  // namespace ergm
