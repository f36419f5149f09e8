#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pgfr/intlattice.hpp"
#include "pgfr/spectrum.hpp"

namespace pgfr {

/// Raised when an operation is asked about a connection set outside the
/// family its derivation covers (the full coset <a>b must be present).
class ScopeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Ordered vertex pairs (u, v) that can carry revival: both in the same
/// coset and |u - v| = n.
std::vector<std::pair<VertexIndex, VertexIndex>> admissible_pairs(std::int64_t n);

/// Integer lattice of exact relations among eigenvalue gaps. Variables are
/// ordered (psi2, psi3, psi4, rho1, ..., rho(n-1)); gap k is the eigenvalue
/// of variable k minus the psi1 eigenvalue (the valency).
struct RelationLattice {
  std::int64_t n = 2;
  std::vector<std::string> variable_names;
  std::vector<Cyclo> gaps;
  IntMatrix basis;
};

/// Lattice of integer vectors l with sum_k l_k * gap_k = 0 exactly,
/// computed as the integer kernel of the rational coordinate matrix of the
/// gaps (denominators cleared, Hermite reduction).
RelationLattice relation_lattice(const ConnectionSet& s);
RelationLattice relation_lattice_from_gaps(std::int64_t n, std::vector<Cyclo> gaps);

/// Linear form whose values on the relation lattice decide revival:
/// psi3 + psi4 + sum over odd-index rho variables when n is odd, the odd
/// rho sum alone when n is even.
Int parity_functional(std::int64_t n, const IntVector& l);

/// Achievable revival parameters implied by the functional gcd d. The
/// phase split theta = delta1 - delta2 must be a multiple of 2*pi/d when
/// d >= 2, vanishes when d = 1 (no revival), and is unconstrained when
/// d = 0; for a given theta the limit amplitudes satisfy
/// |alpha| = |cos(theta/2)| and |beta| = |sin(theta/2)|.
struct RevivalParameters {
  std::int64_t functional_gcd = 0;
  bool revival_possible = false;   // some theta != 0 admissible
  bool pgst_achievable = false;    // theta = pi admissible
  std::vector<double> thetas;      // admissible theta in [0, 2*pi), empty when unconstrained
  std::string description;
};

RevivalParameters derive_parameters(std::int64_t functional_gcd);

/// One sufficient-condition fast path and its outcome on a connection set.
struct TheoremCheck {
  enum class Family {
    OddPrimePower,      // n an odd prime power, odd-exponent count coprime to p -> admits
    PowerOfTwo,         // n = 2^k with the recognized one-pair / level forms -> PGST
    TwoOddPrimes,       // n = p*q*m, uniform p- and q-valuations below those of n -> denies
    TwoPowerTimesOdd,   // n = 2^s * p (odd p > 1), uniform 2-valuation below s -> denies
    PrimePowerPair,     // n = p^t * m and S1 = {a^m, a^-m} -> admits
  };
  enum class Prediction { Admits, Denies, Pgst };

  Family family;
  bool applies = false;
  Prediction prediction = Prediction::Admits;
  std::string detail;
};

std::string family_name(TheoremCheck::Family f);
std::optional<TheoremCheck::Family> family_from_name(const std::string& name);
std::vector<TheoremCheck::Family> all_families();

/// Evaluates the arithmetic hypotheses of every fast path exactly.
std::vector<TheoremCheck> check_theorem_hypotheses(const ConnectionSet& s);

struct PgfrVerdict {
  std::int64_t n = 2;
  std::string vertex_pair_rule;  // fixed descriptor of the admissible pairs
  bool admits_pgfr = false;
  std::int64_t functional_gcd = 0;
  RevivalParameters params;
  RelationLattice lattice;
  std::vector<TheoremCheck> fast_paths;
};

/// The exact decision: gcd of the parity functional over the relation
/// lattice; revival is admitted iff that gcd differs from 1. Requires the
/// b-coset to be present (ScopeError otherwise).
PgfrVerdict decide_pgfr(const ConnectionSet& s);

struct OracleOptions {
  std::uint64_t max_nodes = 400'000'000ULL;
  /// Stop as soon as the running gcd hits 1: the found relations are exact
  /// lattice members, so gcd 1 over any subset already decides the verdict.
  bool stop_at_gcd_one = false;
};

struct OracleResult {
  std::int64_t bound = 0;
  IntMatrix relations;   // canonical sign (first nonzero positive), lex order
  std::int64_t functional_gcd = 0;  // 0 when no relation found
  bool complete = true;  // false when a stop condition ended enumeration early
  std::uint64_t nodes_visited = 0;
};

/// Independent check of decide_pgfr: enumerates all integer vectors with
/// entries in [-bound, bound] by depth-first search with per-coordinate
/// float pruning, keeps those that are exact relations (cyclotomic zero
/// test), and returns the gcd of their functional values.
OracleResult brute_force_oracle(const ConnectionSet& s, std::int64_t bound,
                                const OracleOptions& options = {});
OracleResult brute_force_oracle_from_gaps(std::int64_t n, const std::vector<Cyclo>& gaps,
                                          std::int64_t bound, const OracleOptions& options = {});

/// Cross-checks engine verdict, fast-path predictions, and oracle output.
/// Returns a list of human-readable mismatch descriptions (empty = agree).
std::vector<std::string> cross_validate(const PgfrVerdict& verdict, const OracleResult& oracle);

}  // namespace pgfr
