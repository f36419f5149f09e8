#include <doctest.h>

#include "pgfr/numbers.hpp"

using namespace pgfr;

TEST_CASE("factorize and primality") {
  CHECK(factorize(1).empty());
  CHECK(factorize(12) == std::vector<std::pair<std::int64_t, int>>{{2, 2}, {3, 1}});
  CHECK(factorize(27) == std::vector<std::pair<std::int64_t, int>>{{3, 3}});
  CHECK(is_prime(2));
  CHECK(is_prime(29));
  CHECK(!is_prime(1));
  CHECK(!is_prime(15));
}

TEST_CASE("euler phi") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(2) == 1);
  CHECK(euler_phi(6) == 2);
  CHECK(euler_phi(16) == 8);
  CHECK(euler_phi(30) == 8);
  // multiplicativity on coprime arguments
  CHECK(euler_phi(7 * 16) == euler_phi(7) * euler_phi(16));
}

TEST_CASE("moebius") {
  CHECK(moebius(1) == 1);
  CHECK(moebius(2) == -1);
  CHECK(moebius(6) == 1);
  CHECK(moebius(4) == 0);
  CHECK(moebius(30) == -1);
}

TEST_CASE("p-adic valuation") {
  CHECK(p_adic_valuation(2, 40) == 3);
  CHECK(p_adic_valuation(3, 40) == 0);
  CHECK(p_adic_valuation(5, -75) == 2);
  CHECK_THROWS_AS(p_adic_valuation(2, 0), std::domain_error);
}

TEST_CASE("divisors") {
  CHECK(divisors(1) == std::vector<std::int64_t>{1});
  CHECK(divisors(12) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 12});
}

TEST_CASE("rationals reduce and convert") {
  Rational q(6, 4);
  CHECK(rational_numerator(q) == 3);
  CHECK(rational_denominator(q) == 2);
  CHECK(to_double(q) == doctest::Approx(1.5));
  Rational neg(-3, 9);
  CHECK(rational_numerator(neg) == -1);
  CHECK(rational_denominator(neg) == 3);
}
