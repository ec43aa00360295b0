#pragma once

// Reproducible random sampling. The engine is std::mt19937_64, whose output
// sequence is fixed by the C++ standard; bounded draws use rejection sampling
// instead of std::uniform_int_distribution, whose algorithm is left to the
// implementation.

#include "quartic/forms.hpp"

#include <cstdint>
#include <limits>
#include <random>

namespace quartic {

/// Uniform integer in [lo, hi]: draw 64 bits, reject the top partial bucket, reduce mod span.
inline long long bounded_draw(std::mt19937_64& rng, long long lo, long long hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = span == 0 ? max : max - (max % span + 1) % span;
  std::uint64_t v;
  do {
    v = rng();
  } while (span != 0 && v > limit);
  return lo + static_cast<long long>(span == 0 ? v : v % span);
}

/// Pair with all twelve coefficients uniform in [-bound, bound], drawn A then B in slot order.
inline DoubleTernaryForm<Integer> random_pair(std::mt19937_64& rng, long long bound) {
  DoubleTernaryForm<Integer> p;
  for (auto& c : p.A.c) c = bounded_draw(rng, -bound, bound);
  for (auto& c : p.B.c) c = bounded_draw(rng, -bound, bound);
  return p;
}

/// Random unimodular 3x3 matrix with entries in [-bound, bound] (rejection on det).
inline IntMatrix3 random_unimodular3(std::mt19937_64& rng, long long bound) {
  for (;;) {
    IntMatrix3 g;
    for (auto& row : g)
      for (auto& v : row) v = bounded_draw(rng, -bound, bound);
    Integer d = det3(g);
    if (d == 1 || d == -1) return g;
  }
}

/// Random element of Gamma with entries in [-bound, bound].
inline GammaElement random_gamma(std::mt19937_64& rng, long long bound) {
  GammaElement gamma;
  gamma.g = random_unimodular3(rng, bound);
  Integer dg = det3(gamma.g);
  for (;;) {
    IntMatrix2 h;
    for (auto& row : h)
      for (auto& v : row) v = bounded_draw(rng, -bound, bound);
    if (det2(h) == dg) {  // det(g) det(h) = 1 with det(g) = +-1
      gamma.h = h;
      return gamma;
    }
  }
}

}  // namespace quartic
