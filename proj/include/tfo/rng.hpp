#pragma once

#include <cstdint>
#include <vector>

namespace tfo {

// splitmix64: tiny, well-mixed, and byte-stable across platforms, which the
// deterministic-report requirement needs. The standard <random> distributions
// are not pinned by the standard, so they are deliberately not used here.
class Rng {
 public:
  explicit Rng(uint64_t seed = 0) : state_(seed) {}

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform on [-1, 1] using the top 53 bits.
  double uniform_pm1() {
    double u01 = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    return 2.0 * u01 - 1.0;
  }

  std::vector<double> uniform_pm1_vector(int n) {
    std::vector<double> v(static_cast<size_t>(n));
    for (auto& x : v) x = uniform_pm1();
    return v;
  }

 private:
  uint64_t state_;
};

}  // namespace tfo
