#pragma once

#include <vector>

#include "pgfr/engine.hpp"

namespace pgfr {

/// One connection set drawn from a sufficient-condition family, with the
/// outcome the family guarantees.
struct SweepInstance {
  ConnectionSet set;
  TheoremCheck::Family family;
  TheoremCheck::Prediction prediction;
};

/// Deterministic, seeded instance generation for one family over all
/// eligible n <= n_max: a canonical instance per n plus up to
/// samples_per_n random draws that satisfy the family hypotheses.
std::vector<SweepInstance> generate_family_instances(TheoremCheck::Family family,
                                                     std::int64_t n_max,
                                                     std::size_t samples_per_n,
                                                     std::uint64_t seed);

struct SweepOutcome {
  SweepInstance instance;
  std::int64_t engine_gcd = 0;
  bool engine_admits = false;
  bool hypothesis_detected = false;  // check_theorem_hypotheses recognized the family
  bool consistent = false;
};

/// Runs the engine on every instance and compares the verdict against the
/// family prediction (pgst predictions additionally require an even or
/// vanishing functional gcd).
std::vector<SweepOutcome> run_sweep(const std::vector<SweepInstance>& instances);

}  // namespace pgfr
