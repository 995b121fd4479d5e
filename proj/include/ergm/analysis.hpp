#pragma once

#include <cstdint>
#include <vector>

#include "ergm/cftp.hpp"
#include "ergm/model.hpp"

namespace ergm {

// Histogram of CFTP samples over slot-bit states (n <= 5). Sample i uses
// seed master_seed + i. Counts are exact integers, so the result does not
// depend on how the work is distributed.
std::vector<long long> cftp_state_histogram(const ErgmModel& model,
                                            long long samples,
                                            std::uint64_t master_seed,
                                            Schedule schedule = Schedule::Doubling,
                                            bool parallel = true);

std::vector<double> normalize_histogram(const std::vector<long long>& counts);

// Stop times of `runs` independent CFTP runs (seed master_seed + i).
std::vector<long long> cftp_stop_times(const ErgmModel& model, long long runs,
                                       std::uint64_t master_seed,
                                       Schedule schedule = Schedule::Unit,
                                       bool parallel = true);

// Per-slot edge frequencies over CFTP samples, plus the raw indicators.
struct EdgeFrequencies {
  std::vector<double> per_slot;            // length n(n-1)/2
  std::vector<std::vector<char>> samples;  // samples x slots indicators
};
EdgeFrequencies cftp_edge_frequencies(const ErgmModel& model, long long samples,
                                      std::uint64_t master_seed,
                                      Schedule schedule = Schedule::Doubling,
                                      bool parallel = true);

struct MeanStats {
  double mean = 0.0;
  double sd = 0.0;
  double se = 0.0;
};
MeanStats mean_stats(const std::vector<long long>& xs);

// Two-sample Kolmogorov-Smirnov statistic and rejection threshold
// c(alpha) * sqrt((n+m)/(n*m)) with c(alpha) = sqrt(-ln(alpha/2)/2).
double ks_statistic(std::vector<long long> a, std::vector<long long> b);
double ks_threshold(std::size_t n, std::size_t m, double alpha);

}  // namespace ergm
