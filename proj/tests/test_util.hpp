#pragma once

#include <random>

#include "pgfr/dicyclic.hpp"

namespace pgfr::testing {

// Random valid connection set: inverse-closed cyclic part (nonempty unless
// allow_empty), optional b-coset. Deterministic across platforms: draws
// come straight from the engine output, not from std distributions.
inline ConnectionSet random_connection_set(std::mt19937_64& rng, std::int64_t n,
                                           bool force_coset = false, bool allow_empty = false) {
  ConnectionSet s;
  s.n = n;
  s.includes_ab_coset = force_coset || (rng() & 1);
  while (true) {
    s.s1.clear();
    for (std::int64_t rep = 1; rep <= n; ++rep) {
      if (rng() % 3 != 0) continue;
      s.s1.insert(rep);
      s.s1.insert((2 * n - rep) % (2 * n));
    }
    if (!s.s1.empty() || allow_empty) break;
  }
  if (!s.includes_ab_coset && s.s1.empty()) s.includes_ab_coset = true;
  return s;
}

}  // namespace pgfr::testing
