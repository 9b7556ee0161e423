#pragma once

#include <random>

#include "rotavg/power_matrix.hpp"

namespace rotavg::testing {

/// Random power matrix with entry sum exactly `rank` (stars and bars).
inline PowerMatrix random_power_matrix(std::mt19937_64& rng, int rank) {
  PowerMatrix::Entries e{};
  std::uniform_int_distribution<int> cell(0, 8);
  for (int k = 0; k < rank; ++k) ++e[static_cast<std::size_t>(cell(rng))];
  return PowerMatrix(e);
}

/// Random matrix of random rank in [lo, hi] that satisfies the selection rule.
inline PowerMatrix random_admissible(std::mt19937_64& rng, int lo, int hi) {
  std::uniform_int_distribution<int> rank(lo, hi);
  for (;;) {
    const PowerMatrix m = random_power_matrix(rng, rank(rng));
    if (selection_rule(m)) return m;
  }
}

}  // namespace rotavg::testing
