#pragma once

#include <complex>
#include <iosfwd>
#include <span>
#include <vector>

#include "pgfr/numbers.hpp"

namespace pgfr {

/// Coefficients of the m-th cyclotomic polynomial, ascending degree,
/// monic, degree euler_phi(m). Computed by exact recursive division of
/// x^m - 1 by the lower-order cyclotomic polynomials; results are cached.
const std::vector<Int>& cyclotomic_polynomial(std::int64_t m);

/// An element of the cyclotomic field Q(zeta_m), zeta_m = exp(2*pi*i/m),
/// stored as rational coordinates in the power basis 1, zeta, ...,
/// zeta^(phi(m)-1) modulo the m-th cyclotomic polynomial. The basis
/// property of the cyclotomic polynomial makes the representation unique,
/// so equality and zero tests are coefficient comparisons.
class Cyclo {
 public:
  Cyclo() = default;

  static Cyclo zero(std::int64_t order);
  static Cyclo one(std::int64_t order);
  static Cyclo from_rational(std::int64_t order, Rational value);
  /// zeta_order^exponent, exponent reduced mod order (negatives allowed).
  static Cyclo root_of_unity(std::int64_t order, std::int64_t exponent);

  std::int64_t order() const { return order_; }
  std::size_t basis_size() const { return coeffs_.size(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const Rational& coefficient(std::size_t i) const { return coeffs_[i]; }

  bool is_zero() const;
  /// True when the element equals its own complex conjugate.
  bool is_real() const;
  /// True when only the constant coordinate is nonzero.
  bool is_rational() const;
  /// Constant coordinate; exact value when is_rational().
  const Rational& rational_part() const { return coeffs_[0]; }

  Cyclo conjugate() const;
  /// Re-express in Q(zeta_new_order); new_order must be a multiple of order().
  Cyclo promoted(std::int64_t new_order) const;

  std::complex<double> to_complex() const;
  /// Real part of to_complex(); the elements this project evaluates are real.
  double to_double() const { return to_complex().real(); }

  Cyclo& operator+=(const Cyclo& rhs);
  Cyclo& operator-=(const Cyclo& rhs);
  Cyclo& operator*=(const Cyclo& rhs);
  Cyclo& operator*=(const Rational& scalar);
  Cyclo operator-() const;

  friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
  friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
  friend Cyclo operator*(Cyclo a, const Rational& s) { return a *= s; }
  friend Cyclo operator*(const Rational& s, Cyclo a) { return a *= s; }
  friend bool operator==(const Cyclo& a, const Cyclo& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const Cyclo& x);

 private:
  Cyclo(std::int64_t order, std::vector<Rational> coeffs)
      : order_(order), coeffs_(std::move(coeffs)) {}

  std::int64_t order_ = 1;
  std::vector<Rational> coeffs_{Rational(0)};
};

/// Matrix whose rows are the power-basis coordinates of the inputs
/// (all inputs must share one field order).
std::vector<std::vector<Rational>> rational_coordinates(std::span<const Cyclo> xs);

/// Rank over Q by exact Gaussian elimination.
std::size_t rational_rank(std::vector<std::vector<Rational>> m);

}  // namespace pgfr
