#pragma once

#include <random>
#include <vector>

#include "interp/tuple.hpp"

namespace interp::testing {

// Deterministic pseudo-random admissible tuples with d >= g + r.
inline std::vector<Tuple> random_corpus(size_t count,
                                        unsigned seed = 20240811u) {
  std::mt19937_64 rng(seed);
  std::vector<Tuple> out;
  out.reserve(count);
  std::uniform_int_distribution<i64> rdist(2, 14);
  std::uniform_int_distribution<i64> gdist(0, 10);
  std::uniform_int_distribution<i64> span(0, 25);
  std::uniform_int_distribution<int> extra_points(0, 6);
  std::uniform_int_distribution<int> slot_dist(0, 8);
  while (out.size() < count) {
    const i64 r = rdist(rng);
    const i64 g = gdist(rng);
    const i64 d = g + r + span(rng);
    Tuple t{d, g, r, {}};
    const int extra = extra_points(rng);
    for (int p = 0; p < extra; ++p) {
      const int s = slot_dist(rng);
      t.n.c[s] += 1;
      if (!is_admissible(t)) t.n.c[s] -= 1;
    }
    out.push_back(t);
  }
  return out;
}

}  // namespace interp::testing
