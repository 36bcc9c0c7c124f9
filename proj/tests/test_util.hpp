#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "ordtop/poset.hpp"

namespace ordtop::testutil {

// Top-53-bit double in [0,1); keeps seeded draws identical across platforms.
inline double canon(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * (1.0 / 9007199254740992.0);
}

// Random poset as the closure of a random DAG; edges only go i -> j with
// i < j, so antisymmetry can never fail.
inline FinitePoset random_poset(std::mt19937_64& eng, int min_n, int max_n,
                                double edge_p = 0.3) {
  int n = min_n + static_cast<int>(eng() % static_cast<std::uint64_t>(
                                             max_n - min_n + 1));
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (canon(eng) < edge_p) covers.emplace_back(i, j);
  return build_poset(n, covers);
}

}  // namespace ordtop::testutil
