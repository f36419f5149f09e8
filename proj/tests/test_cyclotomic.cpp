#include <doctest.h>

#include <random>

#include "pgfr/cyclotomic.hpp"

using namespace pgfr;

namespace {

// Test-local polynomial helpers, independent of the library path.
using Poly = std::vector<Int>;

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

Poly poly_div_exact(const Poly& num, const Poly& den) {
  Poly rem = num, quot(num.size() - den.size() + 1, Int(0));
  for (std::size_t i = rem.size(); i-- >= den.size() && i + 1 >= den.size();) {
    Int q = rem[i] / den.back();
    quot[i - den.size() + 1] = q;
    for (std::size_t j = 0; j < den.size(); ++j) rem[i - den.size() + 1 + j] -= q * den[j];
    if (i + 1 == den.size()) break;
  }
  for (const Int& c : rem) REQUIRE(c == 0);
  return quot;
}

Int poly_eval(const Poly& p, Int x) {
  Int acc(0);
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

}  // namespace

TEST_CASE("cyclotomic polynomial small cases") {
  CHECK(cyclotomic_polynomial(1) == Poly{-1, 1});
  CHECK(cyclotomic_polynomial(2) == Poly{1, 1});
  CHECK(cyclotomic_polynomial(4) == Poly{1, 0, 1});
  // Independent oracle for m = 6: divide x^6 - 1 by Phi_1 * Phi_2 * Phi_3.
  Poly x6m1(7, Int(0));
  x6m1[0] = -1;
  x6m1[6] = 1;
  Poly denom = poly_mul(poly_mul(Poly{-1, 1}, Poly{1, 1}), Poly{1, 1, 1});
  CHECK(cyclotomic_polynomial(6) == poly_div_exact(x6m1, denom));
  CHECK(cyclotomic_polynomial(6) == Poly{1, -1, 1});
}

TEST_CASE("cyclotomic polynomial at -1 on twice odd prime powers") {
  CHECK(poly_eval(cyclotomic_polynomial(6), Int(-1)) == 3);
  CHECK(poly_eval(cyclotomic_polynomial(2 * 9), Int(-1)) == 3);
  CHECK(poly_eval(cyclotomic_polynomial(2 * 5), Int(-1)) == 5);
  CHECK(poly_eval(cyclotomic_polynomial(2 * 49), Int(-1)) == 7);
}

TEST_CASE("product of cyclotomic polynomials over divisors is x^m - 1") {
  for (std::int64_t m : {1, 2, 3, 4, 6, 8, 12, 15, 16, 24, 30, 36, 60, 64, 100, 128}) {
    Poly prod{1};
    for (std::int64_t d : divisors(m)) prod = poly_mul(prod, cyclotomic_polynomial(d));
    Poly expect(static_cast<std::size_t>(m) + 1, Int(0));
    expect[0] = -1;
    expect.back() = 1;
    CHECK(prod == expect);
  }
}

TEST_CASE("root powers") {
  // zeta_6^0 = 1, zeta_6^3 = -1 (field Q(zeta_2n) with n = 3)
  CHECK(Cyclo::root_of_unity(6, 0) == Cyclo::one(6));
  CHECK(Cyclo::root_of_unity(6, 3) == -Cyclo::one(6));
  // zeta + zeta^-1 in Q(zeta_6) is exactly 1 (= 2 cos(pi/3))
  Cyclo sum = Cyclo::root_of_unity(6, 1) + Cyclo::root_of_unity(6, 5);
  CHECK(sum == Cyclo::one(6));
  // negative exponents reduce mod the order
  CHECK(Cyclo::root_of_unity(12, -1) == Cyclo::root_of_unity(12, 11));
}

TEST_CASE("field arithmetic") {
  const std::int64_t order = 16;  // Q(zeta_16), i.e. n = 8
  Cyclo zeta = Cyclo::root_of_unity(order, 1);
  Cyclo x = zeta + Cyclo::root_of_unity(order, -1);
  CHECK(x + Cyclo::zero(order) == x);
  CHECK(zeta * Cyclo::root_of_unity(order, order - 1) == Cyclo::one(order));
  // (zeta + zeta^-1)^2 = 2 + (zeta^2 + zeta^-2); numerically (sqrt(2+sqrt 2))^2
  Cyclo squared = x * x;
  Cyclo expect = Cyclo::from_rational(order, 2) + Cyclo::root_of_unity(order, 2) +
                 Cyclo::root_of_unity(order, -2);
  CHECK(squared == expect);
  CHECK(squared.to_double() == doctest::Approx(2.0 + std::sqrt(2.0)).epsilon(1e-12));
  CHECK_THROWS_AS(Cyclo::one(6) + Cyclo::one(12), std::invalid_argument);
}

TEST_CASE("float evaluation") {
  CHECK(Cyclo::zero(10).to_complex() == std::complex<double>(0.0, 0.0));
  Cyclo x = Cyclo::root_of_unity(16, 1) + Cyclo::root_of_unity(16, 15);
  CHECK(x.to_double() == doctest::Approx(std::sqrt(2.0 + std::sqrt(2.0))).epsilon(1e-12));
  Cyclo y = Cyclo::root_of_unity(6, 2) + Cyclo::root_of_unity(6, 4);
  CHECK(y.to_double() == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("conjugation, reality, promotion") {
  Cyclo zeta = Cyclo::root_of_unity(24, 5);
  CHECK(zeta.conjugate() == Cyclo::root_of_unity(24, 19));
  CHECK(!zeta.is_real());
  CHECK((zeta + zeta.conjugate()).is_real());
  // promotion embeds compatibly: zeta_6 = zeta_12^2
  CHECK(Cyclo::root_of_unity(6, 1).promoted(12) == Cyclo::root_of_unity(12, 2));
  Cyclo a = Cyclo::root_of_unity(6, 1) + Cyclo::from_rational(6, Rational(1, 3));
  CHECK(a.promoted(24).to_complex().real() == doctest::Approx(a.to_complex().real()));
  CHECK_THROWS_AS(a.promoted(9), std::invalid_argument);
}

TEST_CASE("rational coordinate rank") {
  {
    std::vector<Cyclo> xs = {Cyclo::one(16), Cyclo::root_of_unity(16, 1),
                             Cyclo::root_of_unity(16, 2)};
    CHECK(rational_rank(rational_coordinates(xs)) == 3);
  }
  {
    // 1 and the three irrational cosine pairs for n = 8 are independent over Q
    std::vector<Cyclo> xs;
    xs.push_back(Cyclo::one(16));
    for (int h = 1; h <= 3; ++h)
      xs.push_back(Cyclo::root_of_unity(16, h) + Cyclo::root_of_unity(16, -h));
    CHECK(rational_rank(rational_coordinates(xs)) == 4);
  }
  {
    Cyclo x = Cyclo::root_of_unity(12, 1) + Cyclo::from_rational(12, 7);
    std::vector<Cyclo> xs = {x, x * Rational(2)};
    CHECK(rational_rank(rational_coordinates(xs)) == 1);
  }
}

TEST_CASE("properties on random elements") {
  std::mt19937_64 rng(0xC0FFEE);
  for (int trial = 0; trial < 200; ++trial) {
    const std::int64_t n = 2 + static_cast<std::int64_t>(rng() % 63);  // field Q(zeta_2n)
    const std::int64_t order = 2 * n;
    auto random_elem = [&]() {
      Cyclo acc = Cyclo::zero(order);
      for (int k = 0; k < 4; ++k) {
        const std::int64_t e = static_cast<std::int64_t>(rng() % order);
        const std::int64_t num = static_cast<std::int64_t>(rng() % 7) - 3;
        acc += Cyclo::root_of_unity(order, e) * Rational(num, 1 + static_cast<int>(rng() % 4));
      }
      return acc;
    };
    Cyclo x = random_elem(), y = random_elem();
    // float evaluation is a ring homomorphism up to rounding
    auto fx = x.to_complex(), fy = y.to_complex();
    CHECK(std::abs((x + y).to_complex() - (fx + fy)) < 1e-10);
    CHECK(std::abs((x * y).to_complex() - (fx * fy)) < 1e-9);
    // inverse root pairs multiply to one
    const std::int64_t e = static_cast<std::int64_t>(rng() % order);
    CHECK(Cyclo::root_of_unity(order, e) * Cyclo::root_of_unity(order, order - e) ==
          Cyclo::one(order));
    // real combinations evaluate with negligible imaginary part
    Cyclo real_elem = x + x.conjugate();
    CHECK(real_elem.is_real());
    CHECK(std::abs(real_elem.to_complex().imag()) < 1e-12);
  }
}
