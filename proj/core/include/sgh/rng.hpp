#pragma once

#include <cmath>
#include <cstdint>

#include "sgh/sphere.hpp"

namespace sgh {

/// SplitMix64 (Steele-Lea-Flood). Fixed integer arithmetic, so streams are
/// identical across platforms and standard libraries.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : s_(state) {}
  std::uint64_t next() {
    std::uint64_t z = (s_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t s_;
};

/// Stream split scheme: the sub-stream for point index i starts at
/// scramble(seed) + (i+1)*phi64. All draws for point i therefore depend
/// only on (seed, i), which makes any prefix of the point sequence
/// independent of the total sample count.
inline SplitMix64 point_stream(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 scrambler(seed);
  std::uint64_t base = scrambler.next();
  return SplitMix64(base + (index + 1) * 0x9E3779B97F4A7C15ULL);
}

inline double uniform01(SplitMix64& g) {  // [0, 1)
  return double(g.next() >> 11) * 0x1.0p-53;
}

inline double uniform01_open(SplitMix64& g) {  // (0, 1]
  return double((g.next() >> 11) + 1) * 0x1.0p-53;
}

inline double uniform_in(SplitMix64& g, double lo, double hi) {
  return lo + (hi - lo) * uniform01(g);
}

/// Box-Muller from explicit uniforms. std::normal_distribution is not used
/// because its stream is unspecified by the standard.
inline void gaussian_pair(SplitMix64& g, double& z0, double& z1) {
  double u1 = uniform01_open(g);
  double u2 = uniform01(g);
  double r = std::sqrt(-2.0 * std::log(u1));
  z0 = r * std::cos(2.0 * kPi * u2);
  z1 = r * std::sin(2.0 * kPi * u2);
}

/// Uniform point of S^dim: normalized standard-Gaussian vector.
inline SpherePoint draw_sphere_point(SplitMix64& g, std::size_t dim) {
  const std::size_t m = dim + 1;
  std::vector<double> c(m);
  for (;;) {
    for (std::size_t i = 0; i + 1 < m; i += 2) gaussian_pair(g, c[i], c[i + 1]);
    if (m % 2 == 1) {
      double z0, z1;
      gaussian_pair(g, z0, z1);
      c[m - 1] = z0;
    }
    double n2 = 0;
    for (double v : c) n2 += v * v;
    if (n2 > 1e-12) {
      double n = std::sqrt(n2);
      for (double& v : c) v /= n;
      return unchecked_point(std::move(c));
    }
  }
}

}  // namespace sgh
