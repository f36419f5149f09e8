#pragma once

#include <complex>
#include <memory>
#include <vector>

#include <Eigen/Dense>

#include "pgfr/representations.hpp"

namespace pgfr {

struct SpectrumEntry {
  IrrepLabel label;
  Cyclo exact;
  double value = 0.0;
  std::int64_t multiplicity = 1;  // degree^2
};

/// Per-representation eigenvalues of Cay(T_4n, S), in canonical label
/// order (psi1..psi4, rho1..rho(n-1)). The psi1 entry is the valency |S|.
struct SpectrumTable {
  std::int64_t n = 2;
  std::int64_t field_order = 4;
  std::vector<SpectrumEntry> entries;

  const SpectrumEntry& by_label(const IrrepLabel& label) const;
};

/// Eigenvalue of each irreducible representation: the character sum over
/// the connection set divided by the representation degree.
SpectrumTable eigenvalues(const ConnectionSet& s);
SpectrumTable eigenvalues(const ConnectionSet& s, const RepTable& reps);

/// Orthogonal projector onto the eigenspace attached to one representation,
/// assembled from the representation coefficient vectors (not from numeric
/// eigenvector routines).
Eigen::MatrixXcd eigenprojector(const IrrepLabel& label, const ConnectionSet& s);

struct TransitionMatrix {
  double t = 0.0;
  Eigen::MatrixXcd entries;
};

/// exp(i t A) assembled from the representation spectral decomposition.
TransitionMatrix transition_matrix(const ConnectionSet& s, double t);

/// exp(i t A) from a dense symmetric eigendecomposition of A; the
/// independent route used to cross-check the representation sum.
Eigen::MatrixXcd dense_transition_matrix(const Eigen::MatrixXd& adjacency, double t);

/// Precomputed spectral data for fast repeated evaluation of selected
/// entries of exp(i t A) at many times t.
class WalkEvaluator {
 public:
  explicit WalkEvaluator(const ConnectionSet& s);

  std::int64_t vertex_count() const { return 4 * n_; }
  const SpectrumTable& spectrum() const { return spectrum_; }

  /// Entry (row, col) of exp(i t A) in O(#labels) time.
  std::complex<double> entry(std::int64_t row, std::int64_t col, double t) const;
  /// Column col of exp(i t A).
  Eigen::VectorXcd column(std::int64_t col, double t) const;
  Eigen::MatrixXcd full(double t) const;

 private:
  std::int64_t n_;
  SpectrumTable spectrum_;
  std::vector<double> eigenvalues_;
  std::vector<Eigen::MatrixXcd> projectors_;
};

/// Ramanujan sum c(h, m): the sum of the h-th powers of the primitive m-th
/// roots of unity. Computed as an exact cyclotomic sum; the result is
/// always a rational integer and non-integrality throws.
Int ramanujan_sum(std::int64_t h, std::int64_t m);

/// Alternating cosine sum over an arithmetic progression of angles:
/// sum_{j=0}^{p-1} (-1)^j cos((a+j*k)*q*pi/(k*p)) for odd p > 1, odd
/// q >= 1, k >= 1, 0 <= a < k. Identically zero; evaluated in doubles so
/// tests can exercise the identity numerically.
double alternating_cosine_sum(std::int64_t p, std::int64_t q, std::int64_t k, std::int64_t a);

}  // namespace pgfr
