#pragma once

#include <random>

#include "specker/correlation.hpp"
#include "specker/polytope.hpp"

namespace specker::testutil {

inline Rat random_rat(std::mt19937_64& rng, int max_den = 64) {
  std::uniform_int_distribution<int> den(1, max_den);
  int q = den(rng);
  std::uniform_int_distribution<int> num(0, q);
  return Rat(num(rng), q);
}

/// Random exact convex mixture of the 12 vertices.
inline CorrelationVector random_mixture(std::mt19937_64& rng) {
  std::array<Rat, 12> w{};
  Rat total = 0;
  std::uniform_int_distribution<int> num(0, 24);
  for (auto& x : w) {
    x = Rat(num(rng));
    total += x;
  }
  if (total == 0) {
    w[0] = 1;
    total = 1;
  }
  CorrelationVector cv;
  for (Pair p : kPairs) {
    for (int idx = 0; idx < 4; ++idx) {
      Rat acc = 0;
      for (int k = 0; k < 12; ++k) acc += w[k] * vertices()[k].cv.table(p)[idx];
      cv.table(p)[idx] = acc / total;
    }
  }
  return cv;
}

}  // namespace specker::testutil
