#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "rectconst/norm.hpp"

namespace rectconst {

// Seeded generator with a platform-independent double mapping, so that
// seeded experiments reproduce across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  std::size_t index(std::size_t n) {
    return static_cast<std::size_t>(engine_() % static_cast<std::uint64_t>(n));
  }
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

// Nonzero vector with coordinates uniform in [-1, 1].
Vector random_vector(Rng& rng, std::size_t dim);

// k uniform angles (k uniform in [k_min, k_max]) with radii uniform in
// [0.5, 1.5], symmetrized and canonicalized.
NormDescriptor random_polygon(Rng& rng, std::size_t k_min = 3, std::size_t k_max = 20);

std::vector<NormDescriptor> random_polygons(std::size_t count, std::uint64_t seed);

}  // namespace rectconst
