#include "pgfr/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace pgfr {

namespace {

// Quotient of exact integer polynomial division; remainder must vanish.
std::vector<Int> divide_exact(const std::vector<Int>& num, const std::vector<Int>& den) {
  std::vector<Int> rem = num;
  const std::size_t dn = den.size() - 1;
  if (rem.size() < den.size()) throw std::logic_error("divide_exact: degree underflow");
  std::vector<Int> quot(rem.size() - dn, Int(0));
  for (std::size_t i = rem.size(); i-- > dn;) {
    if (rem[i] == 0) continue;
    if (rem[i] % den[dn] != 0) throw std::logic_error("divide_exact: not divisible");
    Int q = rem[i] / den[dn];
    quot[i - dn] = q;
    for (std::size_t j = 0; j <= dn; ++j) rem[i - dn + j] -= q * den[j];
  }
  for (const Int& c : rem)
    if (c != 0) throw std::logic_error("divide_exact: nonzero remainder");
  return quot;
}

struct FieldData {
  std::vector<Int> minimal;               // cyclotomic polynomial of the order
  std::size_t degree;                     // euler_phi(order)
  std::vector<std::vector<Rational>> power_table;  // x^e mod minimal, e in [0, order)
};

const FieldData& field_data(std::int64_t order) {
  static std::map<std::int64_t, FieldData> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(order);
  if (it != cache.end()) return it->second;

  FieldData data;
  data.minimal = cyclotomic_polynomial(order);
  data.degree = data.minimal.size() - 1;

  // x^(e+1) from x^e by shift, folding the top power back with
  // x^deg = -(c_0 + c_1 x + ... + c_(deg-1) x^(deg-1)); minimal is monic.
  data.power_table.reserve(static_cast<std::size_t>(order));
  std::vector<Rational> cur(data.degree, Rational(0));
  if (data.degree == 0) throw std::logic_error("field_data: zero degree");
  cur[0] = 1;
  for (std::int64_t e = 0; e < order; ++e) {
    data.power_table.push_back(cur);
    Rational top = data.degree > 0 ? cur[data.degree - 1] : Rational(0);
    for (std::size_t i = data.degree - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0) {
      for (std::size_t i = 0; i < data.degree; ++i)
        cur[i] -= top * Rational(data.minimal[i]);
    }
  }
  return cache.emplace(order, std::move(data)).first->second;
}

void check_same_field(const Cyclo& a, const Cyclo& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("cyclotomic arithmetic requires matching field orders");
}

}  // namespace

const std::vector<Int>& cyclotomic_polynomial(std::int64_t m) {
  if (m < 1) throw std::domain_error("cyclotomic_polynomial: m must be >= 1");
  static std::map<std::int64_t, std::vector<Int>> cache;
  static std::recursive_mutex mtx;
  std::lock_guard<std::recursive_mutex> lock(mtx);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;

  std::vector<Int> result;
  if (m == 1) {
    result = {Int(-1), Int(1)};  // x - 1
  } else {
    // (x^m - 1) / prod over proper divisors d of Phi_d.
    std::vector<Int> num(static_cast<std::size_t>(m) + 1, Int(0));
    num[0] = -1;
    num.back() = 1;
    std::vector<Int> quot = num;
    for (std::int64_t d : divisors(m)) {
      if (d == m) continue;
      quot = divide_exact(quot, cyclotomic_polynomial(d));
    }
    result = std::move(quot);
  }
  return cache.emplace(m, std::move(result)).first->second;
}

Cyclo Cyclo::zero(std::int64_t order) {
  const FieldData& fd = field_data(order);
  return Cyclo(order, std::vector<Rational>(fd.degree, Rational(0)));
}

Cyclo Cyclo::one(std::int64_t order) { return from_rational(order, Rational(1)); }

Cyclo Cyclo::from_rational(std::int64_t order, Rational value) {
  Cyclo x = zero(order);
  x.coeffs_[0] = std::move(value);
  return x;
}

Cyclo Cyclo::root_of_unity(std::int64_t order, std::int64_t exponent) {
  const FieldData& fd = field_data(order);
  std::int64_t e = exponent % order;
  if (e < 0) e += order;
  return Cyclo(order, fd.power_table[static_cast<std::size_t>(e)]);
}

bool Cyclo::is_zero() const {
  for (const Rational& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Cyclo::is_real() const { return *this == conjugate(); }

bool Cyclo::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Cyclo Cyclo::conjugate() const {
  // zeta^e -> zeta^(order - e); re-reduce each basis power.
  Cyclo out = zero(order_);
  const FieldData& fd = field_data(order_);
  for (std::size_t e = 0; e < coeffs_.size(); ++e) {
    if (coeffs_[e] == 0) continue;
    const auto& pw = fd.power_table[static_cast<std::size_t>((order_ - static_cast<std::int64_t>(e)) % order_)];
    for (std::size_t i = 0; i < pw.size(); ++i) out.coeffs_[i] += coeffs_[e] * pw[i];
  }
  return out;
}

Cyclo Cyclo::promoted(std::int64_t new_order) const {
  if (new_order == order_) return *this;
  if (new_order % order_ != 0)
    throw std::invalid_argument("promoted: new order must be a multiple of the current order");
  const std::int64_t stride = new_order / order_;
  Cyclo out = zero(new_order);
  const FieldData& fd = field_data(new_order);
  for (std::size_t e = 0; e < coeffs_.size(); ++e) {
    if (coeffs_[e] == 0) continue;
    const auto& pw = fd.power_table[static_cast<std::size_t>(static_cast<std::int64_t>(e) * stride % new_order)];
    for (std::size_t i = 0; i < pw.size(); ++i) out.coeffs_[i] += coeffs_[e] * pw[i];
  }
  return out;
}

std::complex<double> Cyclo::to_complex() const {
  const double angle = 2.0 * M_PI / static_cast<double>(order_);
  const std::complex<double> zeta(std::cos(angle), std::sin(angle));
  std::complex<double> acc(0.0, 0.0);
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * zeta + pgfr::to_double(coeffs_[i]);
  return acc;
}

Cyclo& Cyclo::operator+=(const Cyclo& rhs) {
  check_same_field(*this, rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& rhs) {
  check_same_field(*this, rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

Cyclo& Cyclo::operator*=(const Cyclo& rhs) {
  check_same_field(*this, rhs);
  const FieldData& fd = field_data(order_);
  const std::size_t deg = fd.degree;
  std::vector<Rational> conv(2 * deg, Rational(0));
  for (std::size_t i = 0; i < deg; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < deg; ++j) {
      if (rhs.coeffs_[j] == 0) continue;
      conv[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  // Fold powers >= deg down using x^deg = -(low-order part of the minimal polynomial).
  for (std::size_t i = conv.size(); i-- > deg;) {
    if (conv[i] == 0) continue;
    Rational top = conv[i];
    conv[i] = 0;
    for (std::size_t j = 0; j < deg; ++j) conv[i - deg + j] -= top * Rational(fd.minimal[j]);
  }
  conv.resize(deg);
  coeffs_ = std::move(conv);
  return *this;
}

Cyclo& Cyclo::operator*=(const Rational& scalar) {
  for (Rational& c : coeffs_) c *= scalar;
  return *this;
}

Cyclo Cyclo::operator-() const {
  Cyclo out = *this;
  for (Rational& c : out.coeffs_) c = -c;
  return out;
}

std::ostream& operator<<(std::ostream& os, const Cyclo& x) {
  os << "[order " << x.order_ << ":";
  for (const Rational& c : x.coeffs_) os << " " << c;
  return os << "]";
}

std::vector<std::vector<Rational>> rational_coordinates(std::span<const Cyclo> xs) {
  std::vector<std::vector<Rational>> rows;
  rows.reserve(xs.size());
  for (const Cyclo& x : xs) {
    if (!xs.empty() && x.order() != xs.front().order())
      throw std::invalid_argument("rational_coordinates: mixed field orders");
    rows.push_back(x.coefficients());
  }
  return rows;
}

std::size_t rational_rank(std::vector<std::vector<Rational>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      Rational factor = m[r][col] / m[rank][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

}  // namespace pgfr
