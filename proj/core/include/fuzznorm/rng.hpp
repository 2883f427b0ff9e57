#pragma once

#include <cstdint>

namespace fuzznorm {

/// splitmix64. Self-contained so that sampled sequences are identical across
/// platforms and standard libraries (uniform_real_distribution is not).
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Derives an independent substream; deterministic in (seed, index).
  static Rng substream(uint64_t seed, uint64_t index) {
    Rng mixer(seed ^ (0xd1342543de82ef95ULL * (index + 1)));
    return Rng(mixer.next());
  }

 private:
  uint64_t state_;
};

}  // namespace fuzznorm
