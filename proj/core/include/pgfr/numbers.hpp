#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace pgfr {

/// Arbitrary-precision integer used for all exact computations.
using Int = boost::multiprecision::cpp_int;

/// Exact rational with reduced representation and positive denominator.
using Rational = boost::multiprecision::cpp_rational;

double to_double(const Rational& q);

Int rational_numerator(const Rational& q);
Int rational_denominator(const Rational& q);

/// Prime factorization of n >= 1 as (prime, exponent) pairs, ascending.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

bool is_prime(std::int64_t n);

std::int64_t euler_phi(std::int64_t n);

/// Moebius function; 0 when n has a squared prime factor.
int moebius(std::int64_t n);

/// p-adic valuation v_p(n) for n != 0. Throws std::domain_error on n == 0.
int p_adic_valuation(std::int64_t p, std::int64_t n);

std::vector<std::int64_t> divisors(std::int64_t n);

std::int64_t gcd64(std::int64_t a, std::int64_t b);

}  // namespace pgfr
