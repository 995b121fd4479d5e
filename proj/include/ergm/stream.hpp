#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ergm/rng.hpp"

namespace ergm {

// Replayable source of (slot index, uniform) pairs for time steps -1, -2, ...
// A record is drawn once and then cached: when the backward window grows, the
// already-seen steps must replay bit-identically. Re-drawing them is the
// classic way to break coupling from the past.
class RandomnessStream {
 public:
  struct Record {
    std::uint32_t slot;  // canonical slot index, uniform over all slots
    double u;            // uniform on [0, 1)
  };

  RandomnessStream(std::uint64_t master_seed, std::size_t n_slots)
      : rng_(master_seed), seed_(master_seed), n_slots_(n_slots) {
    if (n_slots_ == 0) throw std::invalid_argument("stream needs at least one slot");
  }

  // Materialize records through time step -depth.
  void ensure(std::size_t depth) {
    while (records_.size() < depth) {
      const auto slot = static_cast<std::uint32_t>(rng_.bounded(n_slots_));
      const double u = rng_.u01();
      records_.push_back({slot, u});
    }
  }

  // Record for time step -k, k >= 1; must already be materialized.
  const Record& at_negative(std::size_t k) const {
    if (k == 0 || k > records_.size())
      throw std::out_of_range("stream record not materialized");
    return records_[k - 1];
  }

  std::uint64_t master_seed() const { return seed_; }
  std::size_t materialized() const { return records_.size(); }

 private:
  Sfc64 rng_;
  std::uint64_t seed_;
  std::uint64_t n_slots_;
  std::vector<Record> records_;
};

}  // namespace ergm
