#include "pgfr/sweep.hpp"

#include <algorithm>
#include <random>

namespace pgfr {

namespace {

// Draws below `limit` via modulo so generated instances do not depend on
// the standard library's distribution implementation.
std::int64_t draw_below(std::mt19937_64& rng, std::int64_t limit) {
  return static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(limit));
}

ConnectionSet set_from_representatives(std::int64_t n, const std::vector<std::int64_t>& reps) {
  ConnectionSet s;
  s.n = n;
  s.includes_ab_coset = true;
  for (std::int64_t k : reps) {
    s.s1.insert(k);
    s.s1.insert((2 * n - k) % (2 * n));
  }
  return s;
}

// Random nonempty subset of the candidate representatives.
std::vector<std::int64_t> draw_subset(std::mt19937_64& rng,
                                      const std::vector<std::int64_t>& candidates) {
  std::vector<std::int64_t> out;
  while (out.empty()) {
    out.clear();
    for (std::int64_t c : candidates)
      if (rng() & 1) out.push_back(c);
  }
  return out;
}

bool family_applies(const ConnectionSet& s, TheoremCheck::Family family) {
  for (const TheoremCheck& c : check_theorem_hypotheses(s))
    if (c.family == family && c.applies) return true;
  return false;
}

}  // namespace

std::vector<SweepInstance> generate_family_instances(TheoremCheck::Family family,
                                                     std::int64_t n_max,
                                                     std::size_t samples_per_n,
                                                     std::uint64_t seed) {
  std::vector<SweepInstance> out;
  auto push_if_valid = [&](const ConnectionSet& s, TheoremCheck::Prediction pred) {
    if (!validate_connection_set(s).ok) return;
    if (!family_applies(s, family)) return;
    for (const SweepInstance& seen : out)
      if (seen.set.n == s.n && seen.set.s1 == s.s1) return;
    out.push_back({s, family, pred});
  };

  for (std::int64_t n = 2; n <= n_max; ++n) {
    std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(n)) ^
                        static_cast<std::uint64_t>(family));
    const auto nf = factorize(n);
    switch (family) {
      case TheoremCheck::Family::OddPrimePower: {
        if (nf.size() != 1 || nf[0].first % 2 == 0) break;
        std::vector<std::int64_t> candidates;
        for (std::int64_t k = 1; k <= n - 1; ++k) candidates.push_back(k);
        push_if_valid(set_from_representatives(n, {1}), TheoremCheck::Prediction::Admits);
        for (std::size_t i = 0; i < samples_per_n; ++i)
          push_if_valid(set_from_representatives(n, draw_subset(rng, candidates)),
                        TheoremCheck::Prediction::Admits);
        break;
      }
      case TheoremCheck::Family::PowerOfTwo: {
        if (nf.size() != 1 || nf[0].first != 2 || nf[0].second < 2) break;
        const int k = nf[0].second;
        push_if_valid(set_from_representatives(n, {1}), TheoremCheck::Prediction::Pgst);
        for (std::size_t i = 0; i < samples_per_n; ++i) {
          const std::int64_t odd_pair = 2 * draw_below(rng, n / 2) + 1;
          ConnectionSet s = set_from_representatives(n, {odd_pair});
          for (int level = 1; level <= k; ++level) {
            if (!(rng() & 1)) continue;
            for (std::int64_t e = 1; e < 2 * n; ++e)
              if (p_adic_valuation(2, e) == level) s.s1.insert(e);
          }
          push_if_valid(s, TheoremCheck::Prediction::Pgst);
        }
        break;
      }
      case TheoremCheck::Family::TwoOddPrimes: {
        std::vector<std::int64_t> odd_primes;
        for (const auto& [p, e] : nf)
          if (p % 2 == 1) odd_primes.push_back(p);
        if (odd_primes.size() < 2) break;
        const std::int64_t p = odd_primes[0], q = odd_primes[1];
        std::vector<std::int64_t> candidates;
        for (std::int64_t kk = 1; kk <= n - 1; ++kk)
          if (kk % p != 0 && kk % q != 0) candidates.push_back(kk);
        if (candidates.empty()) break;
        push_if_valid(set_from_representatives(n, {candidates[0]}),
                      TheoremCheck::Prediction::Denies);
        for (std::size_t i = 0; i < samples_per_n; ++i)
          push_if_valid(set_from_representatives(n, draw_subset(rng, candidates)),
                        TheoremCheck::Prediction::Denies);
        break;
      }
      case TheoremCheck::Family::TwoPowerTimesOdd: {
        if (n % 2 != 0) break;
        const int s2 = p_adic_valuation(2, n);
        if ((n >> s2) <= 1) break;
        const std::int64_t odd_part = n >> s2;
        for (int sprime = 0; sprime < s2; ++sprime) {
          std::vector<std::int64_t> candidates;
          for (std::int64_t kk = 1; kk <= n - 1; ++kk)
            if (p_adic_valuation(2, kk) == sprime && (kk >> sprime) % odd_part != 0)
              candidates.push_back(kk);
          if (candidates.empty()) continue;
          push_if_valid(set_from_representatives(n, {candidates[0]}),
                        TheoremCheck::Prediction::Denies);
          for (std::size_t i = 0; i < samples_per_n; ++i)
            push_if_valid(set_from_representatives(n, draw_subset(rng, candidates)),
                          TheoremCheck::Prediction::Denies);
        }
        break;
      }
      case TheoremCheck::Family::PrimePowerPair: {
        for (std::int64_t m = 1; m <= n / 3; ++m) {
          if (n % m != 0) continue;
          const auto rf = factorize(n / m);
          if (rf.size() == 1 && rf[0].first % 2 == 1)
            push_if_valid(set_from_representatives(n, {m}), TheoremCheck::Prediction::Admits);
        }
        break;
      }
    }
  }
  return out;
}

std::vector<SweepOutcome> run_sweep(const std::vector<SweepInstance>& instances) {
  std::vector<SweepOutcome> out;
  out.reserve(instances.size());
  for (const SweepInstance& inst : instances) {
    SweepOutcome o;
    o.instance = inst;
    PgfrVerdict v = decide_pgfr(inst.set);
    o.engine_gcd = v.functional_gcd;
    o.engine_admits = v.admits_pgfr;
    o.hypothesis_detected = false;
    for (const TheoremCheck& c : v.fast_paths)
      if (c.family == inst.family && c.applies) o.hypothesis_detected = true;
    const bool predicted_admits = inst.prediction != TheoremCheck::Prediction::Denies;
    o.consistent = o.hypothesis_detected && (predicted_admits == o.engine_admits);
    if (inst.prediction == TheoremCheck::Prediction::Pgst)
      o.consistent = o.consistent && v.params.pgst_achievable;
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace pgfr
