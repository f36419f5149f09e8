#include "pgfr/intlattice.hpp"

#include <stdexcept>

namespace pgfr {

namespace {

Int int_gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int r = a % b;
    a = b;
    b = r;
  }
  return a;
}

}  // namespace

IntMatrix hermite_row_reduce(IntMatrix& a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  IntMatrix u(rows, IntVector(rows, Int(0)));
  for (std::size_t i = 0; i < rows; ++i) u[i][i] = 1;

  auto row_combine = [&](std::size_t dst, std::size_t src, const Int& factor) {
    for (std::size_t c = 0; c < cols; ++c) a[dst][c] -= factor * a[src][c];
    for (std::size_t c = 0; c < rows; ++c) u[dst][c] -= factor * u[src][c];
  };

  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    // Euclid on the column below pivot_row until one nonzero entry remains.
    while (true) {
      std::size_t best = rows;
      for (std::size_t r = pivot_row; r < rows; ++r) {
        if (a[r][col] == 0) continue;
        if (best == rows || abs(a[r][col]) < abs(a[best][col])) best = r;
      }
      if (best == rows) break;  // column is zero below pivot_row
      std::swap(a[best], a[pivot_row]);
      std::swap(u[best], u[pivot_row]);
      bool reduced_all = true;
      for (std::size_t r = pivot_row + 1; r < rows; ++r) {
        if (a[r][col] == 0) continue;
        Int q = a[r][col] / a[pivot_row][col];
        row_combine(r, pivot_row, q);
        if (a[r][col] != 0) reduced_all = false;
      }
      if (reduced_all) break;
    }
    if (a[pivot_row][col] == 0) continue;
    if (a[pivot_row][col] < 0) {
      for (std::size_t c = 0; c < cols; ++c) a[pivot_row][c] = -a[pivot_row][c];
      for (std::size_t c = 0; c < rows; ++c) u[pivot_row][c] = -u[pivot_row][c];
    }
    // Reduce the rows above to keep entries small.
    for (std::size_t r = 0; r < pivot_row; ++r) {
      if (a[r][col] == 0) continue;
      Int q = a[r][col] / a[pivot_row][col];
      if (a[r][col] % a[pivot_row][col] < 0) q -= 1;  // floor division
      if (q != 0) row_combine(r, pivot_row, q);
    }
    ++pivot_row;
  }
  return u;
}

IntMatrix integer_left_kernel(IntMatrix a) {
  const std::size_t rows = a.size();
  IntMatrix u = hermite_row_reduce(a);
  IntMatrix kernel;
  for (std::size_t r = 0; r < rows; ++r) {
    bool zero = true;
    for (const Int& x : a[r])
      if (x != 0) {
        zero = false;
        break;
      }
    if (zero) kernel.push_back(u[r]);
  }
  return kernel;
}

IntMatrix integer_row_relation_basis(const RationalMatrix& rows) {
  if (rows.empty()) return {};
  const std::size_t n_rows = rows.size();
  const std::size_t n_cols = rows[0].size();
  IntMatrix a(n_rows, IntVector(n_cols, Int(0)));
  for (std::size_t c = 0; c < n_cols; ++c) {
    Int scale(1);
    for (std::size_t r = 0; r < n_rows; ++r) {
      const Int den = rational_denominator(rows[r][c]);
      scale = scale / int_gcd(scale, den) * den;
    }
    for (std::size_t r = 0; r < n_rows; ++r) {
      const Rational scaled = rows[r][c] * Rational(scale);
      if (rational_denominator(scaled) != 1)
        throw std::logic_error("integer_row_relation_basis: denominator clearing failed");
      a[r][c] = rational_numerator(scaled);
    }
  }
  return integer_left_kernel(std::move(a));
}

bool in_integer_span(const IntMatrix& basis, const IntVector& v) {
  if (basis.empty()) {
    for (const Int& x : v)
      if (x != 0) return false;
    return true;
  }
  const std::size_t dim = v.size();
  // Solve c * basis = v over Q by elimination on the transposed system.
  std::vector<std::vector<Rational>> m(dim, std::vector<Rational>(basis.size() + 1));
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t k = 0; k < basis.size(); ++k) m[r][k] = Rational(basis[k][r]);
    m[r][basis.size()] = Rational(v[r]);
  }
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t col = 0; col < basis.size() && rank < dim; ++col) {
    std::size_t pr = rank;
    while (pr < dim && m[pr][col] == 0) ++pr;
    if (pr == dim) continue;
    std::swap(m[pr], m[rank]);
    for (std::size_t r = 0; r < dim; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      Rational f = m[r][col] / m[rank][col];
      for (std::size_t c = col; c <= basis.size(); ++c) m[r][c] -= f * m[rank][c];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  // Inconsistent rows mean v is outside even the rational span.
  for (std::size_t r = rank; r < dim; ++r)
    if (m[r][basis.size()] != 0) return false;
  // The kernel lattice basis is saturated, so rational coefficients must
  // come out integral; verify anyway.
  std::vector<Rational> coeff(basis.size(), Rational(0));
  for (std::size_t r = 0; r < rank; ++r)
    coeff[pivot_col[r]] = m[r][basis.size()] / m[r][pivot_col[r]];
  for (const Rational& c : coeff)
    if (rational_denominator(c) != 1) return false;
  // Confirm the combination reproduces v exactly (free columns are zero).
  IntVector recon(dim, Int(0));
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const Int ck = rational_numerator(coeff[k]);
    if (ck == 0) continue;
    for (std::size_t r = 0; r < dim; ++r) recon[r] += ck * basis[k][r];
  }
  return recon == v;
}

Int dot(const IntVector& a, const IntVector& b) {
  Int acc(0);
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

}  // namespace pgfr
