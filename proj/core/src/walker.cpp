#include "pgfr/walker.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <stdexcept>
#include <thread>

namespace pgfr {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

double wrap_to_half_open(double angle) {  // into [0, 2*pi)
  double w = std::fmod(angle, kTwoPi);
  return w < 0 ? w + kTwoPi : w;
}

// Smallest half-width of an arc containing all angles: half of
// (2*pi - largest circular gap between consecutive sorted points).
double circular_half_spread(std::vector<double>& angles) {
  if (angles.size() <= 1) return 0.0;
  std::sort(angles.begin(), angles.end());
  double max_gap = angles.front() + kTwoPi - angles.back();
  for (std::size_t i = 1; i < angles.size(); ++i)
    max_gap = std::max(max_gap, angles[i] - angles[i - 1]);
  return (kTwoPi - max_gap) / 2.0;
}

bool group_one(std::int64_t n, const IrrepLabel& label) {
  // Eigenvalues whose limit phase is delta1; the rest take delta2.
  switch (label.kind) {
    case IrrepLabel::Kind::Psi1:
    case IrrepLabel::Kind::Psi2:
      return true;
    case IrrepLabel::Kind::Psi3:
    case IrrepLabel::Kind::Psi4:
      return n % 2 == 0;
    case IrrepLabel::Kind::Rho:
      return label.h % 2 == 0;
  }
  return true;
}

struct DefectScorer {
  std::vector<double> values_g1;  // eigenvalues targeting delta1
  std::vector<double> values_g2;  // eigenvalues targeting delta2
  std::vector<double> thetas;     // admissible splits; empty = free split
  bool merge_groups = false;      // periodicity: all phases share one target

  // Phases from a raw time.
  double defect_at_time(double t) const {
    return defect_from([&](double lambda) { return wrap_to_half_open(t * lambda); });
  }
  // Phases from t = 2*pi*q via fractional parts, which stays accurate for
  // large q where fmod(t * lambda, 2*pi) would lose precision.
  double defect_at_integer(std::int64_t q, std::vector<double>* /*unused*/ = nullptr) const {
    return defect_from([&](double lambda) {
      double frac = static_cast<double>(q) * lambda;
      frac -= std::floor(frac);
      return frac * kTwoPi;
    });
  }

  template <typename PhaseFn>
  double defect_from(PhaseFn&& phase) const {
    std::vector<double> g1, g2;
    g1.reserve(values_g1.size());
    g2.reserve(values_g2.size());
    for (double lam : values_g1) g1.push_back(phase(lam));
    for (double lam : values_g2) g2.push_back(phase(lam));
    if (merge_groups || values_g2.empty() || values_g1.empty()) {
      for (double a : g2) g1.push_back(a);
      return circular_half_spread(g1);
    }
    if (thetas.empty()) {
      // Free split: the two groups align independently.
      double d1 = circular_half_spread(g1);
      double d2 = circular_half_spread(g2);
      return std::max(d1, d2);
    }
    double best = std::numeric_limits<double>::infinity();
    for (double theta : thetas) {
      std::vector<double> merged = g1;
      for (double a : g2) merged.push_back(wrap_to_half_open(a + theta));
      best = std::min(best, circular_half_spread(merged));
    }
    return best;
  }
};

struct Candidate {
  double defect = std::numeric_limits<double>::infinity();
  double t = 0.0;

  bool operator<(const Candidate& o) const {
    if (defect != o.defect) return defect < o.defect;
    return t < o.t;
  }
};

// Deterministic parallel top-k: each chunk reports its own ranked list and
// the merged result is independent of worker count and scheduling.
template <typename ScoreFn>
std::vector<Candidate> top_candidates(std::size_t count, std::size_t k, unsigned workers,
                                      ScoreFn&& score) {
  if (count == 0 || k == 0) return {};
  unsigned w = workers ? workers : std::max(1u, std::thread::hardware_concurrency());
  w = static_cast<unsigned>(std::min<std::size_t>(w, count));
  std::vector<std::future<std::vector<Candidate>>> jobs;
  const std::size_t chunk = (count + w - 1) / w;
  for (unsigned j = 0; j < w; ++j) {
    const std::size_t lo = j * chunk;
    const std::size_t hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    jobs.push_back(std::async(std::launch::async, [lo, hi, k, &score]() {
      std::vector<Candidate> local;
      for (std::size_t i = lo; i < hi; ++i) {
        Candidate c = score(i);
        local.push_back(c);
        std::push_heap(local.begin(), local.end());
        if (local.size() > k) {
          std::pop_heap(local.begin(), local.end());
          local.pop_back();
        }
      }
      std::sort_heap(local.begin(), local.end());
      return local;
    }));
  }
  std::vector<Candidate> merged;
  for (auto& job : jobs) {
    std::vector<Candidate> part = job.get();
    merged.insert(merged.end(), part.begin(), part.end());
  }
  std::sort(merged.begin(), merged.end());
  if (merged.size() > k) merged.resize(k);
  return merged;
}

}  // namespace

double PhasePair::split() const {
  double d = std::fmod(delta1 - delta2, kTwoPi);
  if (d > M_PI) d -= kTwoPi;
  if (d <= -M_PI) d += kTwoPi;
  return d;
}

FidelitySample sample_fidelity(const WalkEvaluator& walk, std::int64_t n, VertexIndex u,
                               VertexIndex v, double t) {
  if (u != v) {
    const auto pairs = admissible_pairs(n);
    if (std::find(pairs.begin(), pairs.end(), std::make_pair(u, v)) == pairs.end())
      throw std::invalid_argument("sample_fidelity: vertex pair is not admissible for revival");
  }
  const Eigen::VectorXcd col = walk.column(u.value, t);
  FidelitySample s;
  s.t = t;
  s.alpha_est = col(u.value);
  s.beta_est = u == v ? std::complex<double>(0.0, 0.0) : col(v.value);
  s.revival_fidelity = std::norm(s.alpha_est) + std::norm(s.beta_est);
  double leak_direct = 0.0;
  for (Eigen::Index w = 0; w < col.size(); ++w) {
    if (w == u.value || w == v.value) continue;
    leak_direct += std::norm(col(w));
  }
  s.leak = leak_direct;
  if (std::abs((1.0 - s.revival_fidelity) - leak_direct) > 1e-10)
    throw std::logic_error("sample_fidelity: leak cross-check failed (unitarity loss)");
  return s;
}

FidelitySample sample_fidelity(const ConnectionSet& s, VertexIndex u, VertexIndex v, double t) {
  WalkEvaluator walk(s);
  return sample_fidelity(walk, s.n, u, v, t);
}

PhasePair measure_phases(const FidelitySample& sample, double min_fidelity) {
  if (sample.revival_fidelity < min_fidelity)
    throw std::invalid_argument("measure_phases: sample fidelity too low for phase readout");
  PhasePair p;
  p.delta1 = std::arg(sample.alpha_est + sample.beta_est);
  p.delta2 = std::arg(sample.alpha_est - sample.beta_est);
  return p;
}

SearchReport search_revival_time(const ConnectionSet& s, VertexIndex u, VertexIndex v,
                                 std::int64_t functional_gcd, const SearchConfig& config) {
  require_valid(s);
  if (config.epsilon <= 0) throw std::invalid_argument("search_revival_time: epsilon must be > 0");
  WalkEvaluator walk(s);

  SearchReport report;
  report.u = u;
  report.v = v;
  report.periodicity_mode = (u == v);
  report.target_params = derive_parameters(functional_gcd);

  DefectScorer scorer;
  scorer.merge_groups = report.periodicity_mode;
  for (const SpectrumEntry& e : walk.spectrum().entries) {
    (group_one(s.n, e.label) ? scorer.values_g1 : scorer.values_g2).push_back(e.value);
  }
  if (functional_gcd >= 2) {
    // Target the admissible nonzero splits; zero split is periodicity, not revival.
    for (std::int64_t j = 1; j < functional_gcd; ++j)
      scorer.thetas.push_back(kTwoPi * static_cast<double>(j) /
                              static_cast<double>(functional_gcd));
  }

  // Candidate generation: 2*pi*Z sub-grid plus (unless restricted) a coarse
  // real grid on [0, t_max].
  const std::int64_t q_cap = static_cast<std::int64_t>(std::floor(config.t_max / kTwoPi));
  const std::size_t q_count =
      static_cast<std::size_t>(std::max<std::int64_t>(0, std::min<std::int64_t>(
          q_cap, static_cast<std::int64_t>(config.integer_budget))));
  std::vector<Candidate> picks = top_candidates(
      q_count, config.top_k, config.workers, [&](std::size_t i) {
        const std::int64_t q = static_cast<std::int64_t>(i) + 1;
        return Candidate{scorer.defect_at_integer(q), kTwoPi * static_cast<double>(q)};
      });
  if (!config.integer_times_only && config.coarse_steps > 0) {
    const double step = config.t_max / static_cast<double>(config.coarse_steps);
    std::vector<Candidate> grid_picks = top_candidates(
        config.coarse_steps, config.top_k, config.workers, [&](std::size_t i) {
          const double t = step * static_cast<double>(i + 1);
          return Candidate{scorer.defect_at_time(t), t};
        });
    // Local nested-grid refinement of the defect around the best scorers.
    const std::size_t refine_count = std::min<std::size_t>(grid_picks.size(), 8);
    for (std::size_t i = 0; i < refine_count; ++i) {
      Candidate best = grid_picks[i];
      double window = step;
      for (int level = 0; level < config.refine_levels && window > config.refine_min_step;
           ++level) {
        const double lo = best.t - window;
        const double delta = 2.0 * window / static_cast<double>(config.refine_points - 1);
        Candidate local_best = best;
        for (std::size_t p = 0; p < config.refine_points; ++p) {
          const double t = lo + delta * static_cast<double>(p);
          if (t <= 0) continue;
          Candidate c{scorer.defect_at_time(t), t};
          if (c < local_best) local_best = c;
        }
        best = local_best;
        window = delta;
      }
      grid_picks.push_back(best);
    }
    picks.insert(picks.end(), grid_picks.begin(), grid_picks.end());
    std::sort(picks.begin(), picks.end());
  }

  // Full evaluation of the promoted candidates, best defect first.
  const double target = 1.0 - config.epsilon;
  for (const Candidate& c : picks) {
    FidelitySample sample = sample_fidelity(walk, s.n, u, v, c.t);
    report.evaluated.push_back(sample);
    if (sample.revival_fidelity > report.best_fidelity) {
      report.best_fidelity = sample.revival_fidelity;
      report.best_time = sample.t;
      report.best = sample;
      report.trace.push_back(sample);
    }
    if (report.best_fidelity >= target) {
      report.target_reached = true;
      break;
    }
  }
  report.budget_exhausted = !report.target_reached;
  if (!report.periodicity_mode && report.best_fidelity >= 0.5) {
    report.phase_estimates = measure_phases(report.best, 0.5);
  }
  return report;
}

}  // namespace pgfr
