#include "pgfr/numbers.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace pgfr {

double to_double(const Rational& q) {
  return boost::multiprecision::numerator(q).convert_to<double>() /
         boost::multiprecision::denominator(q).convert_to<double>();
}

Int rational_numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
Int rational_denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  if (n < 1) throw std::domain_error("factorize: n must be >= 1");
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.emplace_back(p, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  auto f = factorize(n);
  return f.size() == 1 && f[0].second == 1;
}

std::int64_t euler_phi(std::int64_t n) {
  if (n < 1) throw std::domain_error("euler_phi: n must be >= 1");
  std::int64_t phi = n;
  for (const auto& [p, e] : factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

int moebius(std::int64_t n) {
  if (n < 1) throw std::domain_error("moebius: n must be >= 1");
  int sign = 1;
  for (const auto& [p, e] : factorize(n)) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

int p_adic_valuation(std::int64_t p, std::int64_t n) {
  if (p < 2) throw std::domain_error("p_adic_valuation: p must be >= 2");
  if (n == 0) throw std::domain_error("p_adic_valuation: v_p(0) is undefined");
  n = std::abs(n);
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  if (n < 1) throw std::domain_error("divisors: n must be >= 1");
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d != n / d) out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

}  // namespace pgfr
