#include <doctest.h>

#include <random>

#include "pgfr/engine.hpp"
#include "pgfr/sweep.hpp"
#include "test_util.hpp"

using namespace pgfr;

TEST_CASE("admissible pairs") {
  auto pairs = admissible_pairs(2);
  CHECK(pairs.size() == 8);
  auto has = [&](std::int64_t u, std::int64_t v) {
    return std::find(pairs.begin(), pairs.end(),
                     std::make_pair(VertexIndex{u}, VertexIndex{v})) != pairs.end();
  };
  CHECK(has(0, 2));
  CHECK(has(2, 0));
  CHECK(has(5, 7));
  CHECK(!has(0, 5));

  auto p3 = admissible_pairs(3);
  CHECK(std::find(p3.begin(), p3.end(), std::make_pair(VertexIndex{0}, VertexIndex{3})) !=
        p3.end());
  CHECK(std::find(p3.begin(), p3.end(), std::make_pair(VertexIndex{0}, VertexIndex{7})) ==
        p3.end());
  // closed under swap and under the coset shift u -> u + 2n
  for (const auto& [u, v] : p3) {
    CHECK(std::find(p3.begin(), p3.end(), std::make_pair(v, u)) != p3.end());
    VertexIndex su{(u.value + 6) % 12}, sv{(v.value + 6) % 12};
    CHECK(std::find(p3.begin(), p3.end(), std::make_pair(su, sv)) != p3.end());
  }
}

TEST_CASE("integer kernel of known matrices") {
  {
    // single row (2, -1): kernel generated by (1, 2)
    IntMatrix basis = integer_left_kernel({{Int(2)}, {Int(-1)}});
    REQUIRE(basis.size() == 1);
    IntVector expect = {Int(1), Int(2)};
    IntVector negated = {Int(-1), Int(-2)};
    CHECK((basis[0] == expect || basis[0] == negated));
  }
  {
    // saturation: rows (2,0),(0,2),(1,1) of a 2-column matrix; kernel is
    // rank 1 and must contain (1,1,-2) (not only (2,2,-4))
    IntMatrix basis = integer_left_kernel({{Int(2), Int(0)}, {Int(0), Int(2)}, {Int(1), Int(1)}});
    REQUIRE(basis.size() == 1);
    CHECK(in_integer_span(basis, {Int(1), Int(1), Int(-2)}));
  }
  {
    // identity matrix has trivial kernel
    CHECK(integer_left_kernel({{Int(1), Int(0)}, {Int(0), Int(1)}}).empty());
  }
}

TEST_CASE("relation lattice for the n=3 example") {
  ConnectionSet s{3, {1, 5}, true};
  RelationLattice lat = relation_lattice(s);
  REQUIRE(lat.gaps.size() == 5);
  const std::int64_t F = lat.gaps[0].order();
  // the displayed relation coefficients: gaps (-12, -10, -10, -7, -9)
  const std::vector<std::int64_t> expect = {-12, -10, -10, -7, -9};
  for (std::size_t i = 0; i < 5; ++i)
    CHECK(lat.gaps[i] == Cyclo::from_rational(F, expect[i]));
  CHECK(lat.variable_names ==
        std::vector<std::string>{"psi2", "psi3", "psi4", "rho1", "rho2"});
  // rank 4 kernel of one rational equation in five unknowns
  CHECK(lat.basis.size() == 4);
  for (const IntVector& b : lat.basis) {
    Cyclo acc = Cyclo::zero(F);
    for (std::size_t i = 0; i < 5; ++i) acc += lat.gaps[i] * Rational(b[i]);
    CHECK(acc.is_zero());
  }
}

TEST_CASE("lattice basis vectors are exact relations on random sets") {
  std::mt19937_64 rng(2718);
  for (int trial = 0; trial < 10; ++trial) {
    const std::int64_t n = 2 + static_cast<std::int64_t>(rng() % 11);
    ConnectionSet s = testing::random_connection_set(rng, n, true);
    RelationLattice lat = relation_lattice(s);
    for (const IntVector& b : lat.basis) {
      Cyclo acc = Cyclo::zero(lat.gaps[0].order());
      for (std::size_t i = 0; i < lat.gaps.size(); ++i) acc += lat.gaps[i] * Rational(b[i]);
      CHECK(acc.is_zero());
    }
  }
}

TEST_CASE("duplicate eigenvalues produce the difference vector") {
  // psi3 and psi4 always share an eigenvalue here, so (0, 1, -1, 0, ...)
  // must lie in the lattice.
  ConnectionSet s{4, {1, 7}, true};
  RelationLattice lat = relation_lattice(s);
  IntVector diff(lat.gaps.size(), Int(0));
  diff[1] = 1;
  diff[2] = -1;
  CHECK(in_integer_span(lat.basis, diff));
}

TEST_CASE("scaling all gaps leaves the lattice unchanged") {
  ConnectionSet s{5, {1, 9}, true};
  RelationLattice lat = relation_lattice(s);
  std::vector<Cyclo> scaled = lat.gaps;
  for (Cyclo& g : scaled) g *= Rational(7);
  RelationLattice lat2 = relation_lattice_from_gaps(5, scaled);
  REQUIRE(lat.basis.size() == lat2.basis.size());
  for (const IntVector& b : lat.basis) CHECK(in_integer_span(lat2.basis, b));
  for (const IntVector& b : lat2.basis) CHECK(in_integer_span(lat.basis, b));
}

TEST_CASE("parity functional") {
  // n odd counts psi3, psi4 and odd rho indices
  CHECK(parity_functional(3, {Int(0), Int(0), Int(0), Int(1), Int(0)}) == 1);
  CHECK(parity_functional(3, {Int(5), Int(2), Int(3), Int(1), Int(9)}) == 6);
  // n even counts only odd rho indices
  CHECK(parity_functional(4, {Int(0), Int(1), Int(1), Int(0), Int(0), Int(0)}) == 0);
  CHECK(parity_functional(4, {Int(0), Int(0), Int(0), Int(2), Int(7), Int(-3)}) == -1);
  CHECK(parity_functional(4, IntVector(6, Int(0))) == 0);
}

TEST_CASE("decide on the worked examples") {
  {
    PgfrVerdict v = decide_pgfr({3, {1, 5}, true});
    CHECK(v.admits_pgfr);
    CHECK(v.functional_gcd == 3);
    bool fast_path_hit = false;
    for (const auto& c : v.fast_paths)
      if (c.family == TheoremCheck::Family::OddPrimePower && c.applies) fast_path_hit = true;
    CHECK(fast_path_hit);
  }
  {
    PgfrVerdict v = decide_pgfr({15, {1, 29}, true});
    CHECK(!v.admits_pgfr);
    CHECK(v.functional_gcd == 1);
  }
  {
    PgfrVerdict v = decide_pgfr({6, {1, 11}, true});
    CHECK(!v.admits_pgfr);
    CHECK(v.functional_gcd == 1);
  }
  {
    PgfrVerdict v = decide_pgfr({6, {2, 10}, true});
    CHECK(v.admits_pgfr);
    bool fast_path_hit = false;
    for (const auto& c : v.fast_paths)
      if (c.family == TheoremCheck::Family::PrimePowerPair && c.applies) fast_path_hit = true;
    CHECK(fast_path_hit);
  }
  CHECK_THROWS_AS(decide_pgfr({3, {1, 5}, false}), ScopeError);
}

TEST_CASE("brute force oracle on the n=3 example") {
  ConnectionSet s{3, {1, 5}, true};
  OracleResult o = brute_force_oracle(s, 5);
  CHECK(o.complete);
  CHECK(o.functional_gcd == 3);
  CHECK(!o.relations.empty());
  // every reported relation is exact and canonically signed
  RelationLattice lat = relation_lattice(s);
  for (const IntVector& r : o.relations) {
    Cyclo acc = Cyclo::zero(lat.gaps[0].order());
    for (std::size_t i = 0; i < lat.gaps.size(); ++i) acc += lat.gaps[i] * Rational(r[i]);
    CHECK(acc.is_zero());
    for (const Int& c : r) {
      if (c == 0) continue;
      CHECK(c > 0);
      break;
    }
  }
}

TEST_CASE("oracle finds nothing when no relations exist below the bound") {
  // 1 and zeta + zeta^-1 (a quadratic irrational) admit no integer relation
  std::vector<Cyclo> gaps = {Cyclo::one(16),
                             Cyclo::root_of_unity(16, 1) + Cyclo::root_of_unity(16, -1)};
  OracleResult o = brute_force_oracle_from_gaps(0, gaps, 3);
  CHECK(o.relations.empty());
  CHECK(o.functional_gcd == 0);
  CHECK(o.complete);
}

TEST_CASE("engine gcd equals oracle gcd when the bound covers the basis") {
  std::mt19937_64 rng(1618);
  int checked = 0;
  for (int trial = 0; trial < 30 && checked < 8; ++trial) {
    const std::int64_t n = 2 + static_cast<std::int64_t>(rng() % 5);  // keep boxes small
    ConnectionSet s = testing::random_connection_set(rng, n, true);
    PgfrVerdict v = decide_pgfr(s);
    Int max_norm(0);
    for (const auto& b : v.lattice.basis)
      for (const Int& x : b) max_norm = std::max(max_norm, Int(abs(x)));
    if (max_norm > 4) continue;  // enumeration box would be too large
    const std::int64_t bound = std::max<std::int64_t>(2, max_norm.convert_to<std::int64_t>());
    OracleResult o = brute_force_oracle(s, bound);
    REQUIRE(o.complete);
    CHECK(o.functional_gcd == v.functional_gcd);
    CHECK(cross_validate(v, o).empty());
    ++checked;
  }
  CHECK(checked >= 5);
}

TEST_CASE("theorem hypothesis checks on the known instances") {
  auto find = [](const std::vector<TheoremCheck>& cs, TheoremCheck::Family f) {
    for (const auto& c : cs)
      if (c.family == f) return c;
    REQUIRE(false);
    return cs.front();
  };
  {
    auto cs = check_theorem_hypotheses({3, {1, 5}, true});
    auto c = find(cs, TheoremCheck::Family::OddPrimePower);
    CHECK(c.applies);
    CHECK(c.prediction == TheoremCheck::Prediction::Admits);
  }
  {
    auto cs = check_theorem_hypotheses({8, {1, 15}, true});
    auto c = find(cs, TheoremCheck::Family::PowerOfTwo);
    CHECK(c.applies);
    CHECK(c.prediction == TheoremCheck::Prediction::Pgst);
  }
  {
    // complete 2-adic level set on top of the odd pair, n = 8
    ConnectionSet s{8, {1, 15}, true};
    for (std::int64_t e = 1; e < 16; ++e)
      if (e % 4 == 0 && e % 8 != 0) s.s1.insert(e);
    auto c = find(check_theorem_hypotheses(s), TheoremCheck::Family::PowerOfTwo);
    CHECK(c.applies);
  }
  {
    // incomplete 2-adic level must not match: level 1 of n = 8 is
    // {2, 6, 10, 14}, and only the pair {2, 14} is present
    ConnectionSet s{8, {1, 15, 2, 14}, true};
    auto c = find(check_theorem_hypotheses(s), TheoremCheck::Family::PowerOfTwo);
    CHECK(!c.applies);
  }
  {
    auto cs = check_theorem_hypotheses({15, {1, 29}, true});
    auto c = find(cs, TheoremCheck::Family::TwoOddPrimes);
    CHECK(c.applies);
    CHECK(c.prediction == TheoremCheck::Prediction::Denies);
  }
  {
    auto cs = check_theorem_hypotheses({6, {1, 11}, true});
    auto c = find(cs, TheoremCheck::Family::TwoPowerTimesOdd);
    CHECK(c.applies);
    CHECK(c.prediction == TheoremCheck::Prediction::Denies);
  }
  {
    // degenerate even-order instance: odd part of the exponent is a
    // multiple of the odd part of n; this set actually admits revival
    // (engine gcd 2), so the denial fast path must not claim it
    ConnectionSet s{6, {3, 9}, true};
    auto c = find(check_theorem_hypotheses(s), TheoremCheck::Family::TwoPowerTimesOdd);
    CHECK(!c.applies);
    PgfrVerdict v = decide_pgfr(s);
    CHECK(v.admits_pgfr);
    CHECK(v.functional_gcd == 2);
  }
  {
    auto cs = check_theorem_hypotheses({6, {2, 10}, true});
    auto c = find(cs, TheoremCheck::Family::PrimePowerPair);
    CHECK(c.applies);
    CHECK(c.prediction == TheoremCheck::Prediction::Admits);
  }
  {
    // without the b-coset no fast path applies
    for (const auto& c : check_theorem_hypotheses({6, {2, 10}, false})) CHECK(!c.applies);
  }
  {
    // n = 9, S1 = {a^3, a^-3}: odd-prime-power with r_odd = 1... exponent 3 is
    // odd so gcd(1, 3) = 1 -> applies; also prime-power-pair with m = 3.
    auto cs = check_theorem_hypotheses({9, {3, 15}, true});
    CHECK(find(cs, TheoremCheck::Family::OddPrimePower).applies);
    CHECK(find(cs, TheoremCheck::Family::PrimePowerPair).applies);
  }
  {
    // n = 9 with two odd pairs: r_odd = 2, gcd(2,3) = 1 -> applies
    auto cs = check_theorem_hypotheses({9, {1, 17, 5, 13}, true});
    CHECK(find(cs, TheoremCheck::Family::OddPrimePower).applies);
  }
  {
    // n = 3 with r_odd = 0: hypothesis fails
    auto cs = check_theorem_hypotheses({3, {2, 4}, true});
    CHECK(!find(cs, TheoremCheck::Family::OddPrimePower).applies);
  }
}

TEST_CASE("derived revival parameters") {
  {
    RevivalParameters p = derive_parameters(1);
    CHECK(!p.revival_possible);
    CHECK(!p.pgst_achievable);
  }
  {
    RevivalParameters p = derive_parameters(0);
    CHECK(p.revival_possible);
    CHECK(p.pgst_achievable);
    CHECK(p.thetas.empty());
  }
  {
    RevivalParameters p = derive_parameters(3);
    CHECK(p.revival_possible);
    CHECK(!p.pgst_achievable);
    REQUIRE(p.thetas.size() == 3);
    // theta = 2*pi/3 gives |alpha| = cos(theta/2) = 1/2, |beta| = sqrt(3)/2
    CHECK(std::abs(std::cos(p.thetas[1] / 2)) == doctest::Approx(0.5));
    CHECK(std::abs(std::sin(p.thetas[1] / 2)) == doctest::Approx(std::sqrt(3.0) / 2));
  }
  {
    RevivalParameters p = derive_parameters(2);
    CHECK(p.pgst_achievable);
  }
  CHECK_THROWS_AS(derive_parameters(-1), std::domain_error);
}

TEST_CASE("sweep instances are family members and engine-consistent") {
  for (auto family : all_families()) {
    const auto instances = generate_family_instances(family, 12, 1, 42);
    for (const auto& outcome : run_sweep(instances)) {
      CHECK(outcome.hypothesis_detected);
      CHECK(outcome.consistent);
    }
  }
}
