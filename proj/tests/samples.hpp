#pragma once

#include <random>
#include <vector>

#include "dseries/weights.hpp"
#include "oracle.hpp"

namespace samples {

inline char letter(dseries::Family f) { return dseries::family_name(f)[0]; }

inline oracle::Vec to_vec(const dseries::Weight& w) {
  const auto t = w.twice_vector();
  return oracle::Vec(t.begin(), t.end());
}

inline dseries::Weight from_vec(const oracle::Vec& v) {
  return dseries::Weight::from_twice(std::vector<std::int64_t>(v.begin(), v.end()));
}

// Small dominant highest weight, built coordinate-wise.
inline dseries::Weight random_highest(std::mt19937& rng, dseries::Family f, int rank) {
  std::uniform_int_distribution<int> top(0, 2);
  std::uniform_int_distribution<int> coin(0, 3);
  std::vector<std::int64_t> c(static_cast<std::size_t>(rank));
  if (f == dseries::Family::A) {
    std::uniform_int_distribution<int> start(-1, 2);
    int x = start(rng);
    for (auto& v : c) {
      v = 2 * x;
      x -= top(rng) == 0 ? 0 : 1;
    }
    return dseries::Weight::from_twice(c);
  }
  const bool spin = f != dseries::Family::C && coin(rng) == 0;
  int x = top(rng);
  for (auto& v : c) {
    v = 2 * x + (spin ? 1 : 0);
    if (x > 0 && coin(rng) < 2) --x;
  }
  if (f == dseries::Family::D && coin(rng) == 0) c.back() = -c.back();
  return dseries::Weight::from_twice(c);
}

// Rank used for the n-th random pair of a type: 1..3, and 2..3 for D.
inline int small_rank(dseries::Family f, int trial) { return f == dseries::Family::D ? 2 + trial % 2 : 1 + trial % 3; }

}  // namespace samples
