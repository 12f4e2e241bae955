#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace wpgeom {

/// Seeded Gaussian stream built on mt19937_64 with explicit uniform mapping,
/// so the values do not depend on any library distribution implementation.
class GaussianRng {
 public:
  explicit GaussianRng(std::uint64_t seed) : rng_(seed) {}

  double uniform() { return (rng_() >> 11) * 0x1.0p-53; }

  double gauss() {
    const double u1 = (rng_() >> 11) * 0x1.0p-53 + 0x1.0p-54;
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(6.283185307179586 * u2);
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace wpgeom
