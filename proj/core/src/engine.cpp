#include "pgfr/engine.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

namespace pgfr {

std::vector<std::pair<VertexIndex, VertexIndex>> admissible_pairs(std::int64_t n) {
  if (n < 2) throw std::domain_error("admissible_pairs: n must be >= 2");
  std::vector<std::pair<VertexIndex, VertexIndex>> out;
  for (std::int64_t base : {std::int64_t(0), 2 * n}) {
    for (std::int64_t u = 0; u < 2 * n; ++u) {
      const std::int64_t v = u < n ? u + n : u - n;
      out.push_back({VertexIndex{base + u}, VertexIndex{base + v}});
    }
  }
  return out;
}

RelationLattice relation_lattice_from_gaps(std::int64_t n, std::vector<Cyclo> gaps) {
  if (static_cast<std::int64_t>(gaps.size()) != n + 2)
    throw std::invalid_argument("relation_lattice_from_gaps: expected n+2 gaps");
  RelationLattice lat;
  lat.n = n;
  lat.variable_names = {"psi2", "psi3", "psi4"};
  for (std::int64_t h = 1; h <= n - 1; ++h) lat.variable_names.push_back("rho" + std::to_string(h));
  lat.basis = integer_row_relation_basis(rational_coordinates(gaps));
  lat.gaps = std::move(gaps);
  return lat;
}

RelationLattice relation_lattice(const ConnectionSet& s) {
  if (!s.includes_ab_coset)
    throw ScopeError("relation lattice is derived for connection sets containing the full coset <a>b");
  const SpectrumTable table = eigenvalues(s);
  const Cyclo& valency = table.entries[0].exact;
  std::vector<Cyclo> gaps;
  gaps.reserve(table.entries.size() - 1);
  for (std::size_t i = 1; i < table.entries.size(); ++i)
    gaps.push_back(table.entries[i].exact - valency);
  return relation_lattice_from_gaps(s.n, std::move(gaps));
}

Int parity_functional(std::int64_t n, const IntVector& l) {
  if (static_cast<std::int64_t>(l.size()) != n + 2)
    throw std::invalid_argument("parity_functional: expected n+2 coordinates");
  Int acc(0);
  if (n % 2 == 1) acc += l[1] + l[2];  // psi3 + psi4
  for (std::int64_t h = 1; h <= n - 1; h += 2) acc += l[static_cast<std::size_t>(2 + h)];
  return acc;
}

namespace {

std::int64_t functional_gcd_over(const IntMatrix& basis, std::int64_t n) {
  Int d(0);
  for (const IntVector& b : basis) {
    Int v = parity_functional(n, b);
    if (v < 0) v = -v;
    d = boost::multiprecision::gcd(d, v);
  }
  return d.convert_to<std::int64_t>();
}

// Inverse-pair representatives of the cyclic part, each in [1, n].
std::vector<std::int64_t> pair_representatives(const ConnectionSet& s) {
  std::vector<std::int64_t> reps;
  for (std::int64_t k : s.s1) {
    const std::int64_t r = std::min(k, 2 * s.n - k);
    if (r == k) reps.push_back(r);
  }
  return reps;
}

}  // namespace

RevivalParameters derive_parameters(std::int64_t d) {
  if (d < 0) throw std::domain_error("derive_parameters: gcd must be >= 0");
  RevivalParameters p;
  p.functional_gcd = d;
  std::ostringstream os;
  if (d == 0) {
    p.revival_possible = true;
    p.pgst_achievable = true;
    os << "phase split delta1-delta2 unconstrained; any |alpha| = |cos(theta/2)|, "
          "|beta| = |sin(theta/2)| reachable, including state transfer at theta = pi";
  } else if (d == 1) {
    p.revival_possible = false;
    p.pgst_achievable = false;
    p.thetas = {0.0};
    os << "phase split forced to 0: beta = 0, approximate periodicity only";
  } else {
    p.revival_possible = true;
    p.pgst_achievable = (d % 2 == 0);
    for (std::int64_t j = 0; j < d; ++j)
      p.thetas.push_back(2.0 * M_PI * static_cast<double>(j) / static_cast<double>(d));
    os << "phase split delta1-delta2 restricted to multiples of 2*pi/" << d
       << "; |alpha| = |cos(theta/2)|, |beta| = |sin(theta/2)| for each admissible theta";
    if (p.pgst_achievable)
      os << "; theta = pi admissible, so state transfer is reachable";
    else
      os << "; theta = pi not admissible, no full state transfer";
  }
  p.description = os.str();
  return p;
}

std::string family_name(TheoremCheck::Family f) {
  switch (f) {
    case TheoremCheck::Family::OddPrimePower: return "odd-prime-power";
    case TheoremCheck::Family::PowerOfTwo: return "power-of-two";
    case TheoremCheck::Family::TwoOddPrimes: return "two-odd-primes";
    case TheoremCheck::Family::TwoPowerTimesOdd: return "two-power-times-odd";
    case TheoremCheck::Family::PrimePowerPair: return "prime-power-pair";
  }
  return "?";
}

std::optional<TheoremCheck::Family> family_from_name(const std::string& name) {
  for (TheoremCheck::Family f : all_families())
    if (family_name(f) == name) return f;
  return std::nullopt;
}

std::vector<TheoremCheck::Family> all_families() {
  return {TheoremCheck::Family::OddPrimePower, TheoremCheck::Family::PowerOfTwo,
          TheoremCheck::Family::TwoOddPrimes, TheoremCheck::Family::TwoPowerTimesOdd,
          TheoremCheck::Family::PrimePowerPair};
}

std::vector<TheoremCheck> check_theorem_hypotheses(const ConnectionSet& s) {
  require_valid(s);
  const std::int64_t n = s.n;
  std::vector<TheoremCheck> out;
  const std::vector<std::int64_t> reps = pair_representatives(s);
  const bool reps_proper =  // every representative strictly below n, as the statements require
      std::all_of(reps.begin(), reps.end(), [&](std::int64_t k) { return k <= n - 1; });
  const auto nf = factorize(n);

  {  // odd prime power n = p^k with odd-exponent count coprime to p
    TheoremCheck c{TheoremCheck::Family::OddPrimePower};
    if (s.includes_ab_coset && nf.size() == 1 && nf[0].first % 2 == 1 && reps_proper &&
        !reps.empty()) {
      const std::int64_t p = nf[0].first;
      const std::int64_t r_odd =
          std::count_if(reps.begin(), reps.end(), [](std::int64_t k) { return k % 2 == 1; });
      if (std::gcd(r_odd, p) == 1) {
        c.applies = true;
        c.prediction = TheoremCheck::Prediction::Admits;
        std::ostringstream os;
        os << "n = " << p << "^" << nf[0].second << ", odd-exponent count " << r_odd
           << " coprime to " << p;
        c.detail = os.str();
      }
    }
    out.push_back(c);
  }

  {  // n = 2^k, S1 a single odd pair plus (optionally) complete 2-adic levels
    TheoremCheck c{TheoremCheck::Family::PowerOfTwo};
    if (s.includes_ab_coset && nf.size() == 1 && nf[0].first == 2 && nf[0].second >= 2 &&
        !s.s1.empty()) {
      std::map<int, std::set<std::int64_t>> levels;
      for (std::int64_t k : s.s1) levels[p_adic_valuation(2, k)].insert(k);
      bool matches = levels.count(0) && levels[0].size() == 2;
      for (const auto& [level, members] : levels) {
        if (!matches) break;
        if (level == 0) continue;
        std::size_t full = 0;
        for (std::int64_t k = 1; k < 2 * n; ++k)
          if (p_adic_valuation(2, k) == level) ++full;
        if (members.size() != full) matches = false;
      }
      if (matches) {
        c.applies = true;
        c.prediction = TheoremCheck::Prediction::Pgst;
        std::ostringstream os;
        os << "single odd pair {" << *levels[0].begin() << ", " << *levels[0].rbegin() << "}";
        if (levels.size() > 1) {
          os << " plus complete 2-adic levels";
          for (const auto& [level, members] : levels)
            if (level != 0) os << " " << level;
        }
        c.detail = os.str();
      }
    }
    out.push_back(c);
  }

  {  // n = p*q*m with uniform sub-maximal p- and q-valuations
    TheoremCheck c{TheoremCheck::Family::TwoOddPrimes};
    if (s.includes_ab_coset && !reps.empty() && reps_proper) {
      std::vector<std::int64_t> odd_primes;
      for (const auto& [p, e] : nf)
        if (p % 2 == 1) odd_primes.push_back(p);
      for (std::size_t i = 0; i < odd_primes.size() && !c.applies; ++i)
        for (std::size_t j = 0; j < odd_primes.size() && !c.applies; ++j) {
          if (i == j) continue;
          const std::int64_t p = odd_primes[i], q = odd_primes[j];
          auto uniform_below = [&](std::int64_t prime) {
            const int vn = p_adic_valuation(prime, n);
            const int v0 = p_adic_valuation(prime, reps[0]);
            if (v0 >= vn) return false;
            return std::all_of(reps.begin(), reps.end(), [&](std::int64_t k) {
              return p_adic_valuation(prime, k) == v0;
            });
          };
          if (uniform_below(p) && uniform_below(q)) {
            c.applies = true;
            c.prediction = TheoremCheck::Prediction::Denies;
            std::ostringstream os;
            os << "p = " << p << ", q = " << q << ", uniform valuations below v_p(n), v_q(n)";
            c.detail = os.str();
          }
        }
    }
    out.push_back(c);
  }

  {  // n = 2^s * p (p odd > 1) with uniform 2-valuation below s.
    // The alternating-cosine identity behind this family degenerates when
    // the odd part of some exponent is a multiple of p (such sets can in
    // fact admit revival, e.g. n = 6 with S1 = {a^3, a^-3}), so the
    // recognizer additionally requires p to divide no odd part.
    TheoremCheck c{TheoremCheck::Family::TwoPowerTimesOdd};
    if (s.includes_ab_coset && !reps.empty() && reps_proper && n % 2 == 0) {
      const int s2 = p_adic_valuation(2, n);
      const std::int64_t odd_part = n >> s2;
      if (odd_part > 1) {
        const int v0 = p_adic_valuation(2, reps[0]);
        const bool uniform = std::all_of(reps.begin(), reps.end(), [&](std::int64_t k) {
          return p_adic_valuation(2, k) == v0;
        });
        const bool nondegenerate = std::all_of(reps.begin(), reps.end(), [&](std::int64_t k) {
          return (k >> p_adic_valuation(2, k)) % odd_part != 0;
        });
        if (uniform && v0 < s2 && nondegenerate) {
          c.applies = true;
          c.prediction = TheoremCheck::Prediction::Denies;
          std::ostringstream os;
          os << "n = 2^" << s2 << " * " << odd_part << ", uniform 2-valuation " << v0;
          c.detail = os.str();
        }
      }
    }
    out.push_back(c);
  }

  {  // S1 = {a^m, a^-m} with n/m an odd prime power
    TheoremCheck c{TheoremCheck::Family::PrimePowerPair};
    if (s.includes_ab_coset && reps.size() == 1 && s.s1.size() == 2) {
      const std::int64_t m = reps[0];
      if (m >= 1 && n % m == 0 && n / m > 1) {
        const auto rf = factorize(n / m);
        if (rf.size() == 1 && rf[0].first % 2 == 1) {
          c.applies = true;
          c.prediction = TheoremCheck::Prediction::Admits;
          std::ostringstream os;
          os << "pair exponent " << m << " with n/m = " << rf[0].first << "^" << rf[0].second;
          c.detail = os.str();
        }
      }
    }
    out.push_back(c);
  }

  return out;
}

PgfrVerdict decide_pgfr(const ConnectionSet& s) {
  require_valid(s);
  if (!s.includes_ab_coset)
    throw ScopeError("decision criteria are derived for connection sets containing the full coset <a>b");
  PgfrVerdict v;
  v.n = s.n;
  v.vertex_pair_rule = "revival pairs are (u, v) in one coset with |u - v| = n";
  v.lattice = relation_lattice(s);
  v.functional_gcd = functional_gcd_over(v.lattice.basis, s.n);
  v.admits_pgfr = (v.functional_gcd != 1);
  v.params = derive_parameters(v.functional_gcd);
  v.fast_paths = check_theorem_hypotheses(s);
  return v;
}

namespace {

struct OracleSearch {
  std::int64_t n = 0;
  std::int64_t bound = 0;
  std::uint64_t max_nodes = 0;
  std::uint64_t nodes = 0;
  bool complete = true;
  bool stop_at_gcd_one = false;
  bool stop = false;
  Int running_gcd = Int(0);
  std::vector<std::size_t> order;  // variable indices, by descending |gap|
  // Per variable: float copies of the rational basis coordinates of its gap,
  // as (coordinate index, value) pairs. A relation must cancel every
  // coordinate, so the search prunes coordinate-wise, which is far sharper
  // than pruning on the scalar gap sum alone.
  std::vector<std::vector<std::pair<std::size_t, double>>> sparse_coords;
  std::vector<std::vector<double>> suffix_reach;  // [depth][coord]
  std::size_t coord_count = 0;
  const std::vector<Cyclo>* gaps = nullptr;
  IntVector current;  // in original variable order
  std::vector<double> partial;
  IntMatrix found;

  static constexpr double kTol = 1e-7;

  void run() {
    suffix_reach.assign(order.size() + 1, std::vector<double>(coord_count, 0.0));
    for (std::size_t i = order.size(); i-- > 0;) {
      suffix_reach[i] = suffix_reach[i + 1];
      for (const auto& [c, val] : sparse_coords[order[i]])
        suffix_reach[i][c] += static_cast<double>(bound) * std::abs(val);
    }
    current.assign(sparse_coords.size(), Int(0));
    partial.assign(coord_count, 0.0);
    dfs(0, true);
  }

  void dfs(std::size_t depth, bool prefix_zero) {
    if (stop) return;
    if (++nodes > max_nodes) {
      complete = false;
      stop = true;
      return;
    }
    for (std::size_t c = 0; c < coord_count; ++c)
      if (std::abs(partial[c]) > suffix_reach[depth][c] + kTol) return;
    if (depth == order.size()) {
      if (!prefix_zero) record_candidate();
      return;
    }
    const std::size_t var = order[depth];
    // Sign symmetry: explore only vectors whose first nonzero (in search
    // order) is positive; outputs are re-canonicalized afterwards.
    const std::int64_t lo = prefix_zero ? 0 : -bound;
    for (const auto& [c, val] : sparse_coords[var])
      partial[c] += static_cast<double>(lo) * val;
    for (std::int64_t v = lo; v <= bound; ++v) {
      current[var] = v;
      dfs(depth + 1, prefix_zero && v == 0);
      for (const auto& [c, val] : sparse_coords[var]) partial[c] += val;
    }
    for (const auto& [c, val] : sparse_coords[var])
      partial[c] -= static_cast<double>(bound + 1) * val;
    current[var] = 0;
  }

  void record_candidate() {
    // Exact confirmation of the float candidate.
    Cyclo acc = Cyclo::zero((*gaps)[0].order());
    for (std::size_t i = 0; i < gaps->size(); ++i) {
      if (current[i] == 0) continue;
      acc += (*gaps)[i] * Rational(current[i]);
    }
    if (!acc.is_zero()) return;
    IntVector rel = current;
    for (const Int& c : rel) {
      if (c == 0) continue;
      if (c < 0)
        for (Int& x : rel) x = -x;
      break;
    }
    Int fval = parity_functional(n, rel);
    if (fval < 0) fval = -fval;
    running_gcd = boost::multiprecision::gcd(running_gcd, fval);
    found.push_back(std::move(rel));
    if (stop_at_gcd_one && running_gcd == 1) {
      complete = false;
      stop = true;
    }
  }
};

}  // namespace

OracleResult brute_force_oracle_from_gaps(std::int64_t n, const std::vector<Cyclo>& gaps,
                                          std::int64_t bound, const OracleOptions& options) {
  if (bound < 1) throw std::domain_error("brute_force_oracle: bound must be >= 1");
  OracleSearch search;
  search.n = n;
  search.bound = bound;
  search.max_nodes = options.max_nodes;
  search.stop_at_gcd_one = options.stop_at_gcd_one;
  search.gaps = &gaps;
  std::vector<double> gap_values;
  for (const Cyclo& g : gaps) {
    gap_values.push_back(g.to_double());
    std::vector<std::pair<std::size_t, double>> sparse;
    const auto& coeffs = g.coefficients();
    for (std::size_t c = 0; c < coeffs.size(); ++c)
      if (coeffs[c] != 0) sparse.emplace_back(c, to_double(coeffs[c]));
    search.coord_count = coeffs.size();
    search.sparse_coords.push_back(std::move(sparse));
  }
  search.order.resize(gaps.size());
  std::iota(search.order.begin(), search.order.end(), std::size_t(0));
  std::sort(search.order.begin(), search.order.end(), [&](std::size_t a, std::size_t b) {
    if (std::abs(gap_values[a]) != std::abs(gap_values[b]))
      return std::abs(gap_values[a]) > std::abs(gap_values[b]);
    return a < b;
  });
  search.run();

  OracleResult res;
  res.bound = bound;
  res.complete = search.complete;
  res.nodes_visited = search.nodes;
  std::sort(search.found.begin(), search.found.end());
  res.relations = std::move(search.found);
  Int d(0);
  for (const IntVector& r : res.relations) {
    Int v = parity_functional(n, r);
    if (v < 0) v = -v;
    d = boost::multiprecision::gcd(d, v);
  }
  res.functional_gcd = d.convert_to<std::int64_t>();
  return res;
}

OracleResult brute_force_oracle(const ConnectionSet& s, std::int64_t bound,
                                const OracleOptions& options) {
  RelationLattice lat = relation_lattice(s);
  return brute_force_oracle_from_gaps(s.n, lat.gaps, bound, options);
}

std::vector<std::string> cross_validate(const PgfrVerdict& verdict, const OracleResult& oracle) {
  std::vector<std::string> mismatches;
  const std::int64_t d = verdict.functional_gcd;

  for (const IntVector& r : oracle.relations) {
    if (!in_integer_span(verdict.lattice.basis, r)) {
      mismatches.push_back("oracle relation outside the engine lattice span");
      break;
    }
  }
  for (const IntVector& r : oracle.relations) {
    Int v = parity_functional(verdict.n, r);
    if (v < 0) v = -v;
    const bool ok = (d == 0) ? (v == 0) : (v % d == 0);
    if (!ok) {
      mismatches.push_back("oracle functional value not a multiple of the engine gcd");
      break;
    }
  }
  Int max_norm(0);
  for (const IntVector& b : verdict.lattice.basis)
    for (const Int& x : b) {
      Int a = x < 0 ? Int(-x) : x;
      if (a > max_norm) max_norm = a;
    }
  if (oracle.complete && Int(oracle.bound) >= max_norm && oracle.functional_gcd != d) {
    std::ostringstream os;
    os << "engine gcd " << d << " != oracle gcd " << oracle.functional_gcd
       << " although the oracle bound covers the basis";
    mismatches.push_back(os.str());
  }

  for (const TheoremCheck& c : verdict.fast_paths) {
    if (!c.applies) continue;
    const bool predicted_admits = c.prediction != TheoremCheck::Prediction::Denies;
    if (predicted_admits != verdict.admits_pgfr) {
      mismatches.push_back("fast path " + family_name(c.family) +
                           " prediction disagrees with the engine verdict");
    }
    if (c.prediction == TheoremCheck::Prediction::Pgst && !verdict.params.pgst_achievable) {
      mismatches.push_back("fast path " + family_name(c.family) +
                           " predicts state transfer but theta = pi is not admissible");
    }
  }
  return mismatches;
}

}  // namespace pgfr
