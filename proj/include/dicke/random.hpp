#pragma once

// Seeded random ensembles used by the property tests and the CLI's --seed.

#include <cstdint>
#include <random>

#include "dicke/qmat.hpp"

namespace dicke {

class StateSampler {
 public:
  explicit StateSampler(std::uint64_t seed) : rng_(seed) {}

  /// Full-rank mixed state G G^dagger / tr(G G^dagger), G with i.i.d.
  /// standard complex Gaussian entries.
  DensityMatrix mixed();

  /// Haar-random pure state.
  DensityMatrix pure();

  QubitVector qubit();

  /// Haar-random 2x2 unitary.
  ComplexMatrix2 unitary2();

  double uniform(double lo, double hi);

  /// Probability vector drawn uniformly from the simplex.
  std::array<double, 4> simplex4();

  Complex gaussian();

 private:
  std::mt19937_64 rng_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace dicke
