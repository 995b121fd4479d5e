#pragma once

#include <cstdint>

namespace ergm {

// One SplitMix64 step; used to expand seeds into well-mixed generator state.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Combine a master seed with a stream/replicate index into a fresh seed.
inline std::uint64_t mix_seed(std::uint64_t master, std::uint64_t stream) {
  std::uint64_t s = master ^ (0x9e3779b97f4a7c15ULL * (stream + 1));
  return splitmix64(s);
}

// sfc64: small fast chaotic RNG. The algorithm is fixed here so sequences are
// identical across platforms and standard libraries (the <random>
// distributions are not portable).
class Sfc64 {
 public:
  using result_type = std::uint64_t;
  static constexpr std::uint64_t(min)() { return 0; }
  static constexpr std::uint64_t(max)() { return ~0ULL; }

  explicit Sfc64(std::uint64_t seed) {
    std::uint64_t s = seed;
    a_ = splitmix64(s);
    b_ = splitmix64(s);
    c_ = splitmix64(s);
    counter_ = 1;
    for (int i = 0; i < 12; ++i) next();
  }

  std::uint64_t next() {
    const std::uint64_t tmp = a_ + b_ + counter_++;
    a_ = b_ ^ (b_ >> 11);
    b_ = c_ + (c_ << 3);
    c_ = ((c_ << 24) | (c_ >> 40)) + tmp;
    return tmp;
  }
  std::uint64_t operator()() { return next(); }

  // Unbiased integer in [0, n); multiply-then-reject (Lemire).
  std::uint64_t bounded(std::uint64_t n) {
    unsigned __int128 m = static_cast<unsigned __int128>(next()) * n;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < n) {
      const std::uint64_t t = (0 - n) % n;
      while (lo < t) {
        m = static_cast<unsigned __int128>(next()) * n;
        lo = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  // Uniform double in [0, 1) with 53-bit resolution.
  double u01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t a_, b_, c_, counter_;
};

}  // namespace ergm
